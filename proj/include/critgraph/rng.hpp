#pragma once

#include <cstdint>
#include <initializer_list>

namespace critgraph {

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

// SplitMix64 finaliser (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Child seed for a keyed sub-task. derive(s, a, b) == derive(derive(s, a), b).
constexpr Seed derive(Seed parent, std::uint64_t tag) {
  return Seed{mix64(parent.value ^ mix64(tag + 0x9E3779B97F4A7C15ULL))};
}

constexpr Seed derive(Seed parent, std::initializer_list<std::uint64_t> tags) {
  for (std::uint64_t t : tags) parent = derive(parent, t);
  return parent;
}

// Counter-based SplitMix64: the i-th output is mix64(key + (i + 1) * golden).
// The stream is fully determined by the key and the number of draws, with
// no platform-dependent distribution code involved.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(Seed seed) : key_(seed.value) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    ++counter_;
    return mix64(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform double in (0, 1], 53-bit resolution.
  double uniform_open_closed() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53 + 0x1.0p-53; }

  // Uniform integer in [0, bound), by rejection. bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x < limit) return x % bound;
    }
  }

  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace critgraph

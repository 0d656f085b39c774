#include "critgraph/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "critgraph/parallel.hpp"

namespace critgraph {

namespace {

// Pascal table C(a, b) for a <= n, b <= s; entries that overflow are capped
// at UINT64_MAX and only ever compared against in-range ranks.
class BinomialTable {
 public:
  BinomialTable(int n, int s)
      : width_(s + 1), table_(static_cast<std::size_t>((n + 1) * (s + 1)), 0) {
    for (int a = 0; a <= n; ++a) {
      at(a, 0) = 1;
      for (int b = 1; b <= std::min(a, s); ++b) {
        const std::uint64_t left = at(a - 1, b - 1);
        const std::uint64_t right = b <= a - 1 ? at(a - 1, b) : 0;
        at(a, b) = left > std::numeric_limits<std::uint64_t>::max() - right
                       ? std::numeric_limits<std::uint64_t>::max()
                       : left + right;
      }
    }
  }

  std::uint64_t operator()(int a, int b) const {
    if (b < 0 || a < 0 || b > a) return 0;
    return table_[static_cast<std::size_t>(a * width_ + b)];
  }

 private:
  std::uint64_t& at(int a, int b) { return table_[static_cast<std::size_t>(a * width_ + b)]; }

  int width_;
  std::vector<std::uint64_t> table_;
};

Edge unrank_with(const BinomialTable& choose, int n, int s, std::uint64_t rank) {
  Edge out;
  out.reserve(static_cast<std::size_t>(s));
  Vertex c = 0;
  for (int i = 0; i < s; ++i) {
    for (;; ++c) {
      const std::uint64_t block = choose(n - 1 - c, s - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(c++);
  }
  return out;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

}  // namespace

double default_threshold_constant(int s) {
  double fact = 1.0;
  for (int i = 2; i <= s - 1; ++i) fact *= i;
  return 2.0 * fact;
}

double shamir_p(int n, int s, double C) {
  if (n < 2 || s < 2) throw std::invalid_argument("shamir_p needs n >= 2 and s >= 2");
  const double p = C * std::log(static_cast<double>(n)) / std::pow(static_cast<double>(n), s - 1);
  return std::min(1.0, p);
}

ConstructionParams derive_params(int r, int k, std::optional<double> C) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  ConstructionParams params;
  params.r = r;
  params.k = k;
  params.s = r + 3;
  if (params.s + 1 >= 31) throw std::invalid_argument("r too large: window 2^(s+1) overflows");
  params.m = 1 << (params.s + 1);
  if (k - 1 > (std::numeric_limits<int>::max() - 1) / params.s) {
    throw std::invalid_argument("k too large");
  }
  params.n = params.s * (k - 1) + 1;
  params.C = C.value_or(default_threshold_constant(params.s));
  if (!(params.C > 0.0) || !std::isfinite(params.C)) {
    throw std::invalid_argument("threshold constant must be positive");
  }
  params.l = static_cast<int>(std::ceil(2.0 * std::log2(static_cast<double>(params.n))));
  params.p = params.n - 1 >= 2 ? shamir_p(params.n - 1, params.s, params.C) : 1.0;
  params.q = std::min(1.0, params.l * params.p);
  return params;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

Edge unrank_combination(int n, int s, std::uint64_t rank) {
  if (s < 0 || s > n) throw std::invalid_argument("subset size out of range");
  if (rank >= binomial(n, s)) throw std::invalid_argument("rank out of range");
  return unrank_with(BinomialTable(n, s), n, s, rank);
}

Hypergraph sample_hypergraph(int n, int s, double p, Seed seed) {
  if (s < 2 || s > n) throw std::invalid_argument("sample_hypergraph needs 2 <= s <= n");
  check_probability(p);
  const std::uint64_t total = binomial(n, s);
  std::vector<Edge> edges;
  if (p == 0.0) return Hypergraph(n, {});

  const BinomialTable choose(n, s);
  if (p == 1.0) {
    edges.reserve(total);
    for (std::uint64_t rank = 0; rank < total; ++rank) edges.push_back(unrank_with(choose, n, s, rank));
    return Hypergraph(n, std::move(edges));
  }

  // Gaps between successive included ranks are geometric with parameter p.
  CounterRng rng(seed);
  const double log_miss = std::log1p(-p);
  std::uint64_t next = 0;
  for (;;) {
    const double gap = std::floor(std::log(rng.uniform_open_closed()) / log_miss);
    if (gap >= static_cast<double>(total - next)) break;
    next += static_cast<std::uint64_t>(gap);
    edges.push_back(unrank_with(choose, n, s, next));
    if (++next >= total) break;
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph sample_amplified(int n, int s, double p, int rounds, Seed seed) {
  if (rounds < 1) throw std::invalid_argument("need at least one round");
  std::set<Edge> merged;
  for (int i = 0; i < rounds; ++i) {
    const Hypergraph round = sample_hypergraph(n, s, p, derive(seed, static_cast<std::uint64_t>(i)));
    merged.insert(round.edges().begin(), round.edges().end());
  }
  return Hypergraph(n, std::vector<Edge>(merged.begin(), merged.end()));
}

Hypergraph sample_amplified(int n, int s, const ConstructionParams& params, Seed seed) {
  if (params.n != n || params.s != s) {
    throw std::invalid_argument("construction parameters do not match (n, s)");
  }
  return sample_amplified(n, s, params.p, params.l, seed);
}

std::vector<SweepPoint> pm_threshold_sweep(int s, std::span<const int> n_list,
                                           std::span<const double> p_grid, int samples,
                                           Seed seed, const SweepOptions& options) {
  if (s < 2) throw std::invalid_argument("sweep needs s >= 2");
  if (samples < 1) throw std::invalid_argument("sweep needs at least one sample");
  for (int n : n_list) {
    if (n < s || n % s != 0) {
      throw std::invalid_argument("sweep vertex count " + std::to_string(n) +
                                  " is not a positive multiple of s");
    }
  }
  for (double p : p_grid) check_probability(p);

  std::vector<SweepPoint> rows;
  for (int n : n_list) {
    for (double p : p_grid) rows.push_back({n, p, samples, 0, 0.0});
  }
  const std::size_t per_row = static_cast<std::size_t>(samples);
  std::vector<char> success(rows.size() * per_row, 0);

  parallel_for(success.size(), options.workers, [&](std::size_t task) {
    const std::size_t row = task / per_row;
    const std::size_t p_index = row % p_grid.size();
    const SweepPoint& point = rows[row];
    const Seed sample_seed =
        derive(seed, {static_cast<std::uint64_t>(point.n), p_index, task % per_row});
    const Hypergraph h = sample_hypergraph(point.n, s, point.p, sample_seed);
    success[task] = find_perfect_matching(h, options.matching).outcome == SearchOutcome::found;
  });

  for (std::size_t row = 0; row < rows.size(); ++row) {
    for (std::size_t i = 0; i < per_row; ++i) rows[row].successes += success[row * per_row + i];
    rows[row].fraction = static_cast<double>(rows[row].successes) / samples;
  }
  return rows;
}

}  // namespace critgraph

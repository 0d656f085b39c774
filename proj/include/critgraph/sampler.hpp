#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "critgraph/hypergraph.hpp"
#include "critgraph/matching.hpp"
#include "critgraph/rng.hpp"

namespace critgraph {

// Every quantity of the construction derived from the deletion budget r
// and the target chromatic number k.
struct ConstructionParams {
  int r = 0;       // edge-deletion budget
  int s = 0;       // uniformity, r + 3
  int m = 0;       // sparsity window, 2^(s+1)
  int k = 0;       // target chromatic number
  int n = 0;       // vertex count, s(k-1) + 1
  double C = 0.0;  // threshold constant
  int l = 0;       // amplification rounds, ceil(2 log2 n)
  double p = 0.0;  // single-round edge probability, evaluated at n - 1
  double q = 0.0;  // amplified edge probability min(1, l p)

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

// 2 (s-1)!, twice the sharp threshold constant.
double default_threshold_constant(int s);

// Throws std::invalid_argument for r < 1, k < 2, C <= 0 or parameters too
// large to represent.
ConstructionParams derive_params(int r, int k, std::optional<double> C = std::nullopt);

// min(1, C ln(n) / n^(s-1)).
double shamir_p(int n, int s, double C);

// Binomial coefficient; throws std::overflow_error beyond 64 bits.
std::uint64_t binomial(int n, int k);
// The s-subset of [0, n) with the given lexicographic rank.
Edge unrank_combination(int n, int s, std::uint64_t rank);

// Binomial random s-uniform hypergraph: each s-subset independently with
// probability p. Candidates are visited by geometric skipping over their
// lexicographic ranks, so the cost is proportional to the number of edges.
Hypergraph sample_hypergraph(int n, int s, double p, Seed seed);

// Union of `rounds` independent samples at probability p; distributed as a
// single sample at 1 - (1 - p)^rounds.
Hypergraph sample_amplified(int n, int s, double p, int rounds, Seed seed);
// Uses params.p and params.l; n and s must match params.
Hypergraph sample_amplified(int n, int s, const ConstructionParams& params, Seed seed);

struct SweepPoint {
  int n = 0;
  double p = 0.0;
  int samples = 0;
  int successes = 0;
  double fraction = 0.0;

  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct SweepOptions {
  int workers = 1;
  MatchingOptions matching;
};

// Empirical probability that H_s(n, p) has a perfect matching, for every
// (n, p) pair in n_list x p_grid. Rows are ordered by n then by p index.
// Throws std::invalid_argument if some n is not divisible by s. A sample
// whose search exhausts its budget counts as a failure.
std::vector<SweepPoint> pm_threshold_sweep(int s, std::span<const int> n_list,
                                           std::span<const double> p_grid, int samples,
                                           Seed seed, const SweepOptions& options = {});

}  // namespace critgraph

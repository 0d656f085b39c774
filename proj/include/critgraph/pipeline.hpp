#pragma once

#include <cstdint>
#include <optional>

#include "critgraph/hypergraph.hpp"
#include "critgraph/matching.hpp"
#include "critgraph/rng.hpp"
#include "critgraph/sampler.hpp"
#include "critgraph/verifier.hpp"

namespace critgraph {

struct ConstructConfig {
  int r = 1;
  int k = 2;
  std::optional<double> C;
  Seed seed;
  // Maximum number of sampled attempts; ignored when `instance` is set.
  std::uint64_t restarts = 1000;
  int workers = 1;
  MatchingOptions matching;
  // Verify this hypergraph instead of sampling.
  std::optional<Hypergraph> instance;
};

// Lexicographic quality of a failed attempt: stages passed (degree sanity
// counts as one), then a stage-specific measure of how far the failing
// stage got (violator size, vertices matched before the first failure, or
// the subset count).
struct AttemptScore {
  int stages = 0;
  int detail = 0;
  friend auto operator<=>(const AttemptScore&, const AttemptScore&) = default;
};

struct ConstructOutcome {
  bool success = false;
  Certificate certificate;  // the success, or the fully verified best attempt
  std::uint64_t attempts = 0;
  std::uint64_t degree_rejections = 0;
  AttemptScore best_score;
};

// Sample at q, reject cheaply, verify; the first robust certificate by
// restart index wins regardless of the worker count. Without a success the
// best attempt (ties by lowest index) is re-verified with every stage run
// to completion.
ConstructOutcome run_construct(const ConstructConfig& config);

// Smallest vertex count for which an s-uniform hypergraph can have both a
// perfect matching after every vertex deletion and sparsity on every F of at
// most m edges. Deletion matchings force minimum degree 2, so |E| >= 2n/s;
// with |E| <= m, sparsity on F = E would give n >= (s-1)|E| > n, hence
// |E| > m and any m edges need (s-1)m distinct vertices.
int feasibility_floor(const ConstructionParams& params);

}  // namespace critgraph

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "critgraph/hypergraph.hpp"

namespace critgraph {

enum class SearchOutcome { found, none, budget_exhausted };

struct MatchingOptions {
  std::chrono::milliseconds budget{10'000};
};

struct MatchingResult {
  SearchOutcome outcome = SearchOutcome::none;
  std::optional<Matching> matching;
  std::uint64_t nodes = 0;
};

// Exact perfect-matching search for a uniform hypergraph. Branches on the
// uncovered vertex with the fewest usable edges (lowest id on ties), trying
// its edges in canonical order. Throws std::invalid_argument for
// non-uniform input.
MatchingResult find_perfect_matching(const Hypergraph& h, const MatchingOptions& options = {});

enum class VertexStatus { matched, no_matching, budget_exhausted, not_run };

struct VertexMatchability {
  Vertex vertex = 0;
  VertexStatus status = VertexStatus::not_run;
  // Perfect matching of H - vertex, in the ids of H.
  std::optional<Matching> matching;
};

struct MatchabilityReport {
  std::vector<VertexMatchability> per_vertex;
  bool all_matchable = false;

  bool inconclusive() const;
  std::optional<Vertex> first_failure() const;
};

struct MatchabilityOptions {
  MatchingOptions matching;
  int workers = 1;
  // Vertices after the lowest failing vertex are reported as not_run.
  bool stop_at_first_failure = false;
};

// Searches a perfect matching of H - v for every vertex v. Requires an
// s-uniform H with n = 1 (mod s); throws std::invalid_argument otherwise.
MatchabilityReport all_deletions_matchable(const Hypergraph& h, int s,
                                           const MatchabilityOptions& options = {});

using Coloring = std::vector<int>;
inline constexpr int kUncolored = -1;

// Colour i for the vertices of the i-th matching edge; `removed` gets
// kUncolored. Throws std::invalid_argument unless the matching partitions
// [0, n) minus `removed`.
Coloring matching_to_coloring(const Matching& m, Vertex removed, int n);

}  // namespace critgraph

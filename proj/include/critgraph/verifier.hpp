#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgraph/hypergraph.hpp"
#include "critgraph/matching.hpp"
#include "critgraph/rng.hpp"
#include "critgraph/sampler.hpp"
#include "critgraph/sparsity.hpp"

namespace critgraph {

inline constexpr const char* kToolVersion = "critgraph 0.1.0";

struct SubsetEdgeCount {
  int count = 0;
  VertexSet witness;
  // False when the scan stopped early at a subset at or below the stop
  // threshold; `count` is then an upper bound on the minimum.
  bool exhaustive = true;

  friend bool operator==(const SubsetEdgeCount&, const SubsetEdgeCount&) = default;
};

// Minimum of |E(G[X])| over all t-subsets X, with the lexicographically
// smallest witness attaining it. With `stop_at_or_below`, returns the first
// subset (in lexicographic order per worker chunk) whose count is at most
// that value and marks the result non-exhaustive. Throws
// std::invalid_argument if t > n or t < 1.
SubsetEdgeCount min_subset_edges(const Graph& g, int t, int workers = 1,
                                 std::optional<int> stop_at_or_below = std::nullopt);

// Maximum of |E(G[X])| over t-subsets, lexicographically smallest witness.
SubsetEdgeCount max_subset_edges(const Graph& g, int t, int workers = 1);

// True iff every vertex other than kUncolored ones has a colour and no edge
// of g joins two equally coloured vertices; uncoloured vertices are treated
// as deleted.
bool is_proper_coloring(const Graph& g, const Coloring& colors);
int colors_used(const Coloring& colors);

struct Conclusions {
  std::optional<int> chi;  // set only when both bounds are certified
  bool vertex_critical = false;
  bool robust_to_r = false;

  friend bool operator==(const Conclusions&, const Conclusions&) = default;
};

struct Certificate {
  ConstructionParams params;
  Hypergraph hypergraph;
  Graph graph;  // complement of the 2-section of `hypergraph`
  MatchabilityReport matchability;
  // colorings[v] is derived from the matching of H - v when there is one.
  std::vector<std::optional<Coloring>> colorings;
  std::optional<SparsityVerdict> sparsity;  // nullopt: stage not run
  std::optional<SubsetEdgeCount> min_subset_edges;  // over (s+1)-subsets of graph
  Conclusions conclusions;
  Seed seed;
  std::uint64_t restart = 0;
  std::string tool_version = kToolVersion;
};

enum class Stage { sparsity, matchability, subset_scan };

struct VerifyOptions {
  MatchingOptions matching;
  int workers = 1;
  // Skip the remaining stages once one fails, and let the subset scan stop
  // at the first (s+1)-set with at most r edges.
  bool stop_at_first_failure = false;
  std::vector<Stage> order{Stage::sparsity, Stage::matchability, Stage::subset_scan};
};

// What the recorded witnesses prove:
//  - a subset count >= 1 over all (s+1)-sets means alpha(G) <= s, hence
//    chi(G) >= ceil(n/s) = k; one matching colouring of G - v with k - 1
//    colours plus a colour for v gives chi(G) <= k;
//  - with every G - v coloured by k - 1 colours and alpha <= s on the
//    s(k-1) remaining vertices, G is vertex-critical;
//  - a count >= r + 1 keeps an edge inside every (s+1)-set after deleting
//    any r edges, so alpha(G - R) <= s and chi(G - R) >= k. The certificate
//    claims this only together with full matchability and sparsity.
Conclusions derive_conclusions(const Certificate& c);

// Throws std::invalid_argument unless H is params.s-uniform on params.n
// vertices.
Certificate verify_construction(const Hypergraph& h, const ConstructionParams& params,
                                const VerifyOptions& options = {});

// Number of stages passed by a certificate, for ranking failed attempts.
int stages_passed(const Certificate& c);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> reasons;
};

// Re-derives the graph, re-validates every matching and colouring, recounts
// the subset witness, recomputes the subset minimum and the sparsity
// verdict, and re-derives the conclusions. No matching search is repeated.
CertificateCheck check_certificate(const Certificate& c, int workers = 1);

}  // namespace critgraph

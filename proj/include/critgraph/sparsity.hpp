#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "critgraph/hypergraph.hpp"

namespace critgraph {

// A set of hyperedges (indices into the canonical edge list) spanning too
// few vertices.
struct SparsityViolator {
  std::vector<std::size_t> edges;  // sorted
  int span = 0;                    // |union of the edges|

  friend bool operator==(const SparsityViolator&, const SparsityViolator&) = default;
};

struct SparsityVerdict {
  bool holds = true;
  std::optional<SparsityViolator> violator;
  int m = 0;
  int s = 0;

  friend bool operator==(const SparsityVerdict&, const SparsityVerdict&) = default;
};

// |union F| - (s-1)|F|.
int excess(const Hypergraph& h, std::span<const std::size_t> f, int s);

// Decides whether every F with 1 <= |F| <= m spans at least (s-1)|F|
// vertices. On failure the violator is a minimum-cardinality one (hence
// inclusion-minimal), lexicographically smallest by edge indices among
// those. Requires an s-uniform H with s >= 3.
//
// A minimum violator is connected in the edge-intersection graph: splitting
// it into two non-touching parts makes the excess additive, so one part
// would already violate. Every proper subset has excess >= 0, so growing the
// set one touching edge at a time keeps the excess in {0, 1} until the last
// step. The search enumerates each connected edge set once (extension-set
// enumeration rooted at its smallest index) with iterative deepening on |F|.
SparsityVerdict check_sparsity(const Hypergraph& h, int m, int s, int workers = 1);

// Same verdict (including the violator) by plain enumeration of all edge
// subsets in order of size, then lexicographically. Throws CapExceeded if
// more than `cap` subsets would have to be inspected.
SparsityVerdict brute_force_sparsity(const Hypergraph& h, int m, int s,
                                     std::uint64_t cap = 50'000'000);

// True iff `v` records its true span, violates, and no nonempty proper
// subset of it violates. Exhaustive over subsets; throws CapExceeded for
// violators with more than 24 edges.
bool is_inclusion_minimal_violator(const Hypergraph& h, const SparsityViolator& v, int s);

}  // namespace critgraph

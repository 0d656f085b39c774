#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "critgraph/hypergraph.hpp"
#include "critgraph/verifier.hpp"

namespace critgraph {

// A set W of at most two vertices whose removal splits the 2-section into
// two nonempty sides with no edge between them.
struct CutWitness {
  VertexSet w;
  VertexSet side_a;
  VertexSet side_b;

  friend bool operator==(const CutWitness&, const CutWitness&) = default;
};

// Raised when a step of the cut construction produces something the
// argument says cannot happen (|W| > 2 or an empty side). Carries enough to
// serialise the instance as a counterexample.
class CutConstructionFailure : public std::runtime_error {
 public:
  CutConstructionFailure(const std::string& what, Hypergraph instance)
      : std::runtime_error(what), instance_(std::move(instance)) {}
  const Hypergraph& instance() const { return instance_; }

 private:
  Hypergraph instance_;
};

// |V| <= 1 + sum (|e| - 1). Throws std::invalid_argument if the 2-section
// is disconnected.
bool connected_bound_check(const Hypergraph& h);

// |union F| >= sum_{e in F} (|e| - 1) for every nonempty F. Throws
// CapExceeded for more than `max_edges` edges.
bool density_hypothesis_check(const Hypergraph& h, int max_edges = 24);

// Builds a cut following the block argument: with an edge e0 of size >= 3,
// take the smallest v outside e0, its component C in the 2-section of
// H - e0, and W = e0 ∩ C with sides C \ W and V \ C. Otherwise H is a graph
// (size-1 edges dropped): W is empty if it is disconnected; if it has a leaf,
// W is the smallest cut vertex (the leaf's neighbour is one); otherwise the
// graph is a cycle and W = {0, smallest non-neighbour of 0}. In the graph
// case this is the smallest valid W by size, then lexicographically.
// Throws std::invalid_argument naming the violated precondition.
CutWitness find_small_cut(const Hypergraph& h);

// Recomputes components of the 2-section minus W.
bool is_valid_cut(const Hypergraph& h, const CutWitness& cut);

struct EdgeBoundResult {
  bool holds = true;
  VertexSet worst;      // lexicographically smallest (s+1)-set attaining the maximum
  int worst_count = 0;  // its number of 2-section edges
  int bound = 0;        // C(s, 2) + 2
};

// Checks that every (s+1)-subset spans at most C(s,2) + 2 edges of the
// 2-section. Requires s >= 3, an s-uniform H with at least s + 1 vertices,
// and sparsity for all F with |F| < 2^(s+1); throws HypothesisNotMet if
// the sparsity hypothesis fails.
EdgeBoundResult edge_bound_check(const Hypergraph& h, int s);

// Streams every labelled hypergraph on n vertices with at most max_edges
// edges, each drawn from the subsets whose size is in `sizes`. Order: by
// edge count, then lexicographically by candidate index tuple, candidates
// sorted lexicographically. Throws CapExceeded on construction when the
// total exceeds `cap`.
class HypergraphEnumerator {
 public:
  HypergraphEnumerator(int n, int max_edges, std::set<int> sizes, std::uint64_t cap = 50'000'000);

  std::uint64_t total() const { return total_; }
  std::optional<Hypergraph> next();

 private:
  int n_;
  int max_edges_;
  std::vector<Edge> candidates_;
  std::uint64_t total_ = 0;
  int size_ = 0;
  std::vector<int> pick_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace critgraph

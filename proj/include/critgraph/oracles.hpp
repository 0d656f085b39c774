#pragma once

#include <cstdint>

#include "critgraph/hypergraph.hpp"

// Exhaustive reference answers for small instances. Nothing here shares
// code with the searches it is used to check.
namespace critgraph::oracle {

// Tries every set of n/s edges. Throws CapExceeded beyond `cap` sets.
bool has_perfect_matching(const Hypergraph& h, std::uint64_t cap = 20'000'000);

// Largest edgeless vertex subset over all 2^n subsets (n <= 24).
int independence_number(const Graph& g);

// Fewest independent sets covering V, by dynamic programming over all
// vertex subsets (n <= 16).
int chromatic_number(const Graph& g);

// Minimum induced edge count over all t-subsets, by full recount.
int min_subset_edge_count(const Graph& g, int t);

// Whether some W with |W| <= 2 leaves the 2-section with two or more
// components.
bool has_small_cut(const Hypergraph& h);

}  // namespace critgraph::oracle

#pragma once

#include "critgraph/hypergraph.hpp"

namespace critgraph {

// Exact graph invariants used to cross-check certified bounds. Both work on
// 64-bit adjacency masks, so caps above 64 are rejected.

// Maximum independent set size by branch and bound; the bound at each node
// is a greedy clique cover of the candidates. Throws CapExceeded if
// g.n() > cap.
int exact_independence(const Graph& g, int cap = 60);

// Maximum clique size, same search on the complement.
int clique_number(const Graph& g, int cap = 64);

// Chromatic number by iterative deepening from the clique number: each k is
// decided by DSATUR-ordered backtracking with forward checking. Returns 0
// for the empty graph. Throws CapExceeded if g.n() > cap.
int exact_chromatic(const Graph& g, int cap = 45);

}  // namespace critgraph

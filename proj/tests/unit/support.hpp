#pragma once

#include <vector>

#include "critgraph/hypergraph.hpp"
#include "critgraph/rng.hpp"

namespace testing {

using namespace critgraph;

inline Graph complete_graph(int n) {
  std::vector<GraphEdge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<GraphEdge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

inline Graph path_graph(int n) {
  std::vector<GraphEdge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes v -- v+5.
inline Graph petersen_graph() {
  std::vector<GraphEdge> e;
  for (int v = 0; v < 5; ++v) {
    e.emplace_back(v, (v + 1) % 5);
    e.emplace_back(5 + v, 5 + (v + 2) % 5);
    e.emplace_back(v, v + 5);
  }
  return Graph(10, e);
}

inline Graph random_graph(int n, double p, CounterRng& rng) {
  std::vector<GraphEdge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform_open_closed() <= p) e.emplace_back(u, v);
  return Graph(n, e);
}

inline void subsets_of_size(int n, int s, std::vector<int>& cur, int from, std::vector<Edge>& out) {
  if (static_cast<int>(cur.size()) == s) {
    out.push_back(cur);
    return;
  }
  for (int v = from; v < n; ++v) {
    cur.push_back(v);
    subsets_of_size(n, s, cur, v + 1, out);
    cur.pop_back();
  }
}

inline Hypergraph complete_uniform(int n, int s) {
  std::vector<Edge> edges;
  std::vector<int> cur;
  subsets_of_size(n, s, cur, 0, edges);
  return Hypergraph(n, edges);
}

// Each subset of size in [1, max_size] kept with probability p.
inline Hypergraph random_mixed_hypergraph(int n, int max_size, double p, CounterRng& rng) {
  std::vector<Edge> edges;
  for (int s = 1; s <= max_size; ++s) {
    std::vector<Edge> all;
    std::vector<int> cur;
    subsets_of_size(n, s, cur, 0, all);
    for (auto& e : all)
      if (rng.uniform_open_closed() <= p) edges.push_back(e);
  }
  return Hypergraph(n, edges);
}

}  // namespace testing

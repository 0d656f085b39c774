#include "critgraph/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace critgraph {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n) + ")");
  }
}

// old id -> new id (or -1) for the complement of `removed` in [0, n).
std::vector<Vertex> keep_map(int n, std::span<const Vertex> keep, std::vector<Vertex>& original) {
  std::vector<Vertex> renumber(static_cast<std::size_t>(n), -1);
  original.clear();
  for (Vertex v : keep) {
    check_vertex(n, v);
    if (renumber[v] != -1) throw std::invalid_argument("vertex set contains duplicates");
    renumber[v] = 0;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (renumber[v] == 0) {
      renumber[v] = static_cast<Vertex>(original.size());
      original.push_back(v);
    }
  }
  return renumber;
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (Edge& e : edges_) {
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("hyperedge repeats a vertex");
    }
    check_vertex(n, e.front());
    check_vertex(n, e.back());
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate hyperedge");
  }
}

std::optional<int> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  const auto s = edges_.front().size();
  for (const Edge& e : edges_) {
    if (e.size() != s) return std::nullopt;
  }
  return static_cast<int>(s);
}

bool Hypergraph::is_uniform(int s) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [s](const Edge& e) { return static_cast<int>(e.size()) == s; });
}

std::optional<std::size_t> Hypergraph::find_edge(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    for (Vertex v : e) ++deg[v];
  }
  return deg;
}

Graph::Graph(int n, std::span<const GraphEdge> edges) : adjacency_(static_cast<std::size_t>(n)) {
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw std::invalid_argument("self-loop");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (VertexSet& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const VertexSet& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const VertexSet& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

std::vector<GraphEdge> Graph::edges() const {
  std::vector<GraphEdge> out;
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Matching Matching::from_edges(std::vector<Edge> edges) {
  Matching m;
  for (Edge& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) m.covered.insert(m.covered.end(), e.begin(), e.end());
  std::sort(m.covered.begin(), m.covered.end());
  if (std::adjacent_find(m.covered.begin(), m.covered.end()) != m.covered.end()) {
    throw std::invalid_argument("matching edges are not pairwise disjoint");
  }
  m.edges = std::move(edges);
  return m;
}

Graph two_section(const Hypergraph& h) {
  std::vector<GraphEdge> pairs;
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) pairs.emplace_back(e[i], e[j]);
    }
  }
  return Graph(h.n(), pairs);
}

Graph complement(const Graph& g) {
  std::vector<GraphEdge> pairs;
  for (Vertex u = 0; u < g.n(); ++u) {
    const VertexSet& nb = g.neighbors(u);
    auto it = nb.begin();
    for (Vertex v = u + 1; v < g.n(); ++v) {
      it = std::lower_bound(it, nb.end(), v);
      if (it == nb.end() || *it != v) pairs.emplace_back(u, v);
    }
  }
  return Graph(g.n(), pairs);
}

RemappedHypergraph delete_vertex(const Hypergraph& h, Vertex v) {
  check_vertex(h.n(), v);
  RemappedHypergraph out;
  out.original.reserve(static_cast<std::size_t>(h.n() - 1));
  for (Vertex u = 0; u < h.n(); ++u) {
    if (u != v) out.original.push_back(u);
  }
  std::vector<Edge> kept;
  for (const Edge& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), v)) continue;
    Edge mapped = e;
    for (Vertex& u : mapped) u = u > v ? u - 1 : u;
    kept.push_back(std::move(mapped));
  }
  out.hypergraph = Hypergraph(h.n() - 1, std::move(kept));
  return out;
}

Hypergraph delete_hyperedge(const Hypergraph& h, std::size_t index) {
  if (index >= h.edge_count()) throw std::invalid_argument("hyperedge index out of range");
  std::vector<Edge> kept;
  kept.reserve(h.edge_count() - 1);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (i != index) kept.push_back(h.edge(i));
  }
  return Hypergraph(h.n(), std::move(kept));
}

RemappedHypergraph restrict_to(const Hypergraph& h, std::span<const Vertex> x) {
  RemappedHypergraph out;
  const auto renumber = keep_map(h.n(), x, out.original);
  std::vector<Edge> projected;
  for (const Edge& e : h.edges()) {
    Edge p;
    for (Vertex v : e) {
      if (renumber[v] >= 0) p.push_back(renumber[v]);
    }
    if (p.size() >= 2) projected.push_back(std::move(p));
  }
  std::sort(projected.begin(), projected.end());
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
  out.hypergraph = Hypergraph(static_cast<int>(out.original.size()), std::move(projected));
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> classes;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex root = 0; root < g.n(); ++root) {
    if (seen[root]) continue;
    VertexSet cls{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (Vertex w : g.neighbors(cls[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          cls.push_back(w);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph delete_edges(const Graph& g, std::span<const GraphEdge> r) {
  std::vector<GraphEdge> doomed;
  for (auto [u, v] : r) {
    check_vertex(g.n(), u);
    check_vertex(g.n(), v);
    if (!g.adjacent(u, v)) {
      throw std::invalid_argument("cannot delete non-edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
    }
    doomed.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(doomed.begin(), doomed.end());
  std::vector<GraphEdge> kept;
  for (const GraphEdge& e : g.edges()) {
    if (!std::binary_search(doomed.begin(), doomed.end(), e)) kept.push_back(e);
  }
  return Graph(g.n(), kept);
}

RemappedGraph induced_subgraph(const Graph& g, std::span<const Vertex> x) {
  RemappedGraph out;
  const auto renumber = keep_map(g.n(), x, out.original);
  std::vector<GraphEdge> kept;
  for (auto [u, v] : g.edges()) {
    if (renumber[u] >= 0 && renumber[v] >= 0) kept.emplace_back(renumber[u], renumber[v]);
  }
  out.graph = Graph(static_cast<int>(out.original.size()), kept);
  return out;
}

RemappedGraph delete_vertices(const Graph& g, std::span<const Vertex> w) {
  std::vector<char> removed(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : w) {
    check_vertex(g.n(), v);
    removed[v] = 1;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

}  // namespace critgraph

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace critgraph {

using Vertex = int;
// Strictly increasing list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::vector<Vertex>;
using GraphEdge = std::pair<Vertex, Vertex>;

// Hypergraph on vertices 0..n-1 in canonical form: every hyperedge is a
// strictly sorted nonempty vertex list, and the edge list is sorted
// lexicographically without duplicates.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Sorts each edge and the edge list. Throws std::invalid_argument on
  // out-of-range ids, empty edges, repeated vertices or duplicate edges.
  Hypergraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  // Common edge size if all edges have the same size; nullopt for the
  // empty or mixed case.
  std::optional<int> uniformity() const;
  // True when every edge has exactly s vertices (vacuous for no edges).
  bool is_uniform(int s) const;
  // Index of an edge in canonical order, if present.
  std::optional<std::size_t> find_edge(const Edge& e) const;
  std::vector<int> degrees() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Simple undirected graph stored as sorted per-vertex neighbour lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adjacency_(static_cast<std::size_t>(n)) {}
  // Duplicate pairs are merged. Throws on self-loops or out-of-range ids.
  Graph(int n, std::span<const GraphEdge> edges);

  int n() const { return static_cast<int>(adjacency_.size()); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::size_t edge_count() const;
  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<GraphEdge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adjacency_;
};

// Pairwise disjoint hyperedges together with the union they cover.
struct Matching {
  std::vector<Edge> edges;
  VertexSet covered;

  // Throws std::invalid_argument if two edges intersect.
  static Matching from_edges(std::vector<Edge> edges);
  bool is_perfect_for(int n) const { return static_cast<int>(covered.size()) == n; }

  friend bool operator==(const Matching&, const Matching&) = default;
};

// A hypergraph or graph on a compacted vertex set together with the map
// from new ids back to the ids of the source object.
struct RemappedHypergraph {
  Hypergraph hypergraph;
  std::vector<Vertex> original;
};

struct RemappedGraph {
  Graph graph;
  std::vector<Vertex> original;
};

Graph two_section(const Hypergraph& h);
Graph complement(const Graph& g);

// H - v: drops v and every hyperedge through it; survivors are relabelled.
RemappedHypergraph delete_vertex(const Hypergraph& h, Vertex v);
// H - e for the hyperedge with the given canonical index.
Hypergraph delete_hyperedge(const Hypergraph& h, std::size_t index);
// Vertex set X, hyperedges {e ∩ X : |e ∩ X| >= 2} deduplicated.
RemappedHypergraph restrict_to(const Hypergraph& h, std::span<const Vertex> x);

// Connected components ordered by smallest member; each class sorted.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Keeps every vertex; throws std::invalid_argument if R contains a non-edge.
Graph delete_edges(const Graph& g, std::span<const GraphEdge> r);
RemappedGraph delete_vertices(const Graph& g, std::span<const Vertex> w);
RemappedGraph induced_subgraph(const Graph& g, std::span<const Vertex> x);

}  // namespace critgraph

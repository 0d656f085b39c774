#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "critgraph/hypergraph.hpp"
#include "support.hpp"

using namespace critgraph;
using namespace testing;

namespace {

std::vector<GraphEdge> pairs(std::initializer_list<GraphEdge> list) { return list; }

}  // namespace

TEST_CASE("hypergraph canonical form") {
  Hypergraph h(5, {{4, 2, 3}, {2, 1, 0}});
  CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {2, 3, 4}});
  CHECK(h.uniformity() == 3);
  CHECK(h.find_edge({2, 3, 4}) == 1u);
  CHECK_FALSE(h.find_edge({1, 2, 3}).has_value());
  CHECK(h.degrees() == std::vector<int>{1, 1, 2, 1, 1});

  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_FALSE(Hypergraph(4, {{0}, {1, 2}}).uniformity().has_value());
}

TEST_CASE("graph basics") {
  Graph g(4, pairs({{1, 0}, {0, 1}, {2, 3}}));
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK(g.edges() == std::vector<GraphEdge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(Graph(3, pairs({{1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, pairs({{0, 3}})), std::invalid_argument);
}

TEST_CASE("two_section examples") {
  Graph tri = two_section(Hypergraph(4, {{0, 1, 2}}));
  CHECK(tri == Graph(4, pairs({{0, 1}, {0, 2}, {1, 2}})));
  CHECK(tri.degree(3) == 0);
  CHECK(two_section(Hypergraph(3, {})) == Graph(3));
  CHECK(two_section(Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}})) == path_graph(4));
  // singleton hyperedges contribute nothing
  CHECK(two_section(Hypergraph(2, {{0}, {1}})).edge_count() == 0);
}

TEST_CASE("complement examples") {
  CHECK(complement(complete_graph(4)) == Graph(4));
  CHECK(complement(Graph(3)) == complete_graph(3));
  const Graph other_cycle(5, pairs({{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}));
  CHECK(complement(cycle_graph(5)) == other_cycle);
}

TEST_CASE("delete_vertex examples") {
  auto r = delete_vertex(Hypergraph(4, {{0, 1, 2}, {1, 2, 3}}), 0);
  CHECK(r.hypergraph == Hypergraph(3, {{0, 1, 2}}));
  CHECK(r.original == std::vector<Vertex>{1, 2, 3});

  auto iso = delete_vertex(Hypergraph(4, {{0, 1}, {1, 2}}), 3);
  CHECK(iso.hypergraph == Hypergraph(3, {{0, 1}, {1, 2}}));

  auto gone = delete_vertex(Hypergraph(3, {{0, 1, 2}}), 1);
  CHECK(gone.hypergraph.n() == 2);
  CHECK(gone.hypergraph.edge_count() == 0);
  CHECK_THROWS_AS(delete_vertex(Hypergraph(3, {}), 3), std::invalid_argument);
}

TEST_CASE("restrict examples") {
  const Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}});
  const std::vector<Vertex> x{0, 1, 2, 3};
  auto r = restrict_to(h, x);
  CHECK(r.hypergraph == Hypergraph(4, {{0, 1, 2}, {2, 3}}));
  CHECK(r.original == x);

  const std::vector<Vertex> sparse{0, 3};
  CHECK(restrict_to(h, sparse).hypergraph.edge_count() == 0);

  const std::vector<Vertex> pair{0, 1};
  CHECK(restrict_to(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}), pair).hypergraph ==
        Hypergraph(2, {{0, 1}}));
}

TEST_CASE("components examples") {
  const Graph tri_plus = two_section(Hypergraph(4, {{0, 1, 2}}));
  CHECK(components(tri_plus) == std::vector<VertexSet>{{0, 1, 2}, {3}});
  CHECK(components(Graph(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
  CHECK(components(path_graph(4)).size() == 1);
  CHECK(is_connected(path_graph(4)));
  CHECK_FALSE(is_connected(tri_plus));
}

TEST_CASE("delete_edges and delete_vertices examples") {
  const std::vector<GraphEdge> one{{0, 1}};
  CHECK(delete_edges(complete_graph(4), one).edge_count() == 5);
  CHECK_THROWS_AS(delete_edges(cycle_graph(4), std::vector<GraphEdge>{{0, 2}}), std::invalid_argument);

  const std::vector<Vertex> none;
  auto same = delete_vertices(cycle_graph(5), none);
  CHECK(same.graph == cycle_graph(5));

  const std::vector<Vertex> opposite{0, 2};
  auto split = delete_vertices(cycle_graph(4), opposite);
  CHECK(split.graph == Graph(2));
  CHECK(split.original == std::vector<Vertex>{1, 3});
}

TEST_CASE("restrict commutes with two_section on random hypergraphs") {
  CounterRng rng(Seed{11});
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const Hypergraph h = random_mixed_hypergraph(n, 4, 0.15, rng);
    std::vector<Vertex> x;
    for (int v = 0; v < n; ++v)
      if (rng.below(2)) x.push_back(v);
    auto restricted = restrict_to(h, x);
    auto induced = induced_subgraph(two_section(h), x);
    REQUIRE(restricted.original == induced.original);
    CHECK(two_section(restricted.hypergraph) == induced.graph);
  }
}

TEST_CASE("structural invariants on random instances") {
  CounterRng rng(Seed{12});
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const Hypergraph h = random_mixed_hypergraph(n, 4, 0.2, rng);
    const Graph g = two_section(h);

    CHECK(complement(complement(g)) == g);

    for (const Edge& e : h.edges())
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) CHECK(g.adjacent(e[i], e[j]));

    // two_section(H - v) is contained in two_section(H) - v
    const Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    auto minus = delete_vertex(h, v);
    const std::vector<Vertex> w{v};
    auto g_minus = delete_vertices(g, w);
    REQUIRE(minus.original == g_minus.original);
    for (auto [a, b] : two_section(minus.hypergraph).edges()) CHECK(g_minus.graph.adjacent(a, b));

    // components partition [0, n)
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    Vertex last_min = -1;
    for (const VertexSet& cls : components(g)) {
      CHECK(cls.front() > last_min);
      last_min = cls.front();
      for (Vertex u : cls) ++seen[u];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("matching construction") {
  auto m = Matching::from_edges({{3, 4, 5}, {0, 1, 2}});
  CHECK(m.edges == std::vector<Edge>{{0, 1, 2}, {3, 4, 5}});
  CHECK(m.covered == VertexSet{0, 1, 2, 3, 4, 5});
  CHECK(m.is_perfect_for(6));
  CHECK_FALSE(m.is_perfect_for(7));
  CHECK_THROWS_AS(Matching::from_edges({{0, 1}, {1, 2}}), std::invalid_argument);
}

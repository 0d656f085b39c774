#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "critgraph/errors.hpp"
#include "critgraph/exact.hpp"
#include "critgraph/io.hpp"
#include "critgraph/oracles.hpp"
#include "critgraph/sampler.hpp"
#include "critgraph/verifier.hpp"
#include "support.hpp"

using namespace critgraph;
using namespace testing;

namespace {

// 4-uniform, edges are the nine cyclic runs {i, i+1, i+2, i+3} mod 9.
// Every H - v splits into two runs, and the complement of the 2-section is
// the 9-cycle of distance-4 pairs, so alpha(G) = 4 and chi(G) = 3.
Hypergraph cyclic_runs() {
  std::vector<Edge> edges;
  for (int i = 0; i < 9; ++i) edges.push_back({i, (i + 1) % 9, (i + 2) % 9, (i + 3) % 9});
  return Hypergraph(9, edges);
}

// Lexicographically first t-subset with the fewest induced edges, by
// plain enumeration.
std::pair<int, VertexSet> brute_min_subset(const Graph& g, int t) {
  std::vector<Edge> all;
  std::vector<int> cur;
  subsets_of_size(g.n(), t, cur, 0, all);
  int best = -1;
  VertexSet witness;
  for (const auto& x : all) {
    int c = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) c += g.adjacent(x[i], x[j]);
    if (best < 0 || c < best) {
      best = c;
      witness = x;
    }
  }
  return {best, witness};
}

bool has_reason(const CertificateCheck& c, const std::string& reason) {
  return std::find(c.reasons.begin(), c.reasons.end(), reason) != c.reasons.end();
}

}  // namespace

TEST_CASE("exact_independence examples") {
  CHECK(exact_independence(complete_graph(5)) == 1);
  CHECK(exact_independence(cycle_graph(5)) == 2);
  const Graph petersen = petersen_graph();
  REQUIRE(petersen.edge_count() == 15);
  const int alpha = oracle::independence_number(petersen);
  CHECK(alpha == 4);
  CHECK(exact_independence(petersen) == alpha);
  CHECK(exact_independence(Graph(0)) == 0);
  CHECK_THROWS_AS(exact_independence(Graph(61)), CapExceeded);
  CHECK_THROWS_AS(exact_independence(Graph(10), 65), CapExceeded);
}

TEST_CASE("exact_chromatic examples") {
  CHECK(exact_chromatic(complete_graph(4)) == 4);
  CHECK(exact_chromatic(cycle_graph(5)) == 3);
  const int chi = oracle::chromatic_number(petersen_graph());
  CHECK(chi == 3);
  CHECK(exact_chromatic(petersen_graph()) == chi);
  CHECK(exact_chromatic(Graph(3)) == 1);
  CHECK(exact_chromatic(Graph(0)) == 0);
  CHECK(clique_number(petersen_graph()) == 2);
  CHECK_THROWS_AS(exact_chromatic(Graph(46)), CapExceeded);
}

TEST_CASE("exact solvers agree with enumeration on small graphs") {
  CounterRng rng(Seed{41});
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(n, rng.uniform_open_closed(), rng);
    CHECK(exact_independence(g) == oracle::independence_number(g));
    CHECK(exact_chromatic(g) == oracle::chromatic_number(g));
    CHECK(clique_number(g) == oracle::independence_number(complement(g)));
  }
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 9 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(n, 0.2 + 0.6 * rng.uniform_open_closed(), rng);
    CHECK(exact_independence(g) == oracle::independence_number(g));
    CHECK(exact_chromatic(g) == oracle::chromatic_number(g));
  }
}

TEST_CASE("min_subset_edges examples") {
  auto k5 = min_subset_edges(complete_graph(5), 5);
  CHECK(k5.count == 10);
  CHECK(k5.witness == VertexSet{0, 1, 2, 3, 4});
  CHECK(k5.exhaustive);
  auto empty = min_subset_edges(Graph(6), 5);
  CHECK(empty.count == 0);
  CHECK(empty.witness == VertexSet{0, 1, 2, 3, 4});
  CHECK(min_subset_edges(cycle_graph(5), 5).count == 5);
  CHECK_THROWS_AS(min_subset_edges(Graph(4), 5), std::invalid_argument);

  CHECK(max_subset_edges(cycle_graph(6), 3).count == 2);
}

TEST_CASE("min_subset_edges matches enumeration") {
  CounterRng rng(Seed{42});
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(11));
    const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 6))));
    const Graph g = random_graph(n, rng.uniform_open_closed(), rng);
    const auto [count, witness] = brute_min_subset(g, t);
    const auto fast = min_subset_edges(g, t, 1 + static_cast<int>(rng.below(3)));
    CHECK(fast.count == count);
    CHECK(fast.count == oracle::min_subset_edge_count(g, t));
    CHECK(fast.witness == witness);

    auto early = min_subset_edges(g, t, 1, count);
    CHECK(early.count <= count);
    if (!early.exhaustive) CHECK(early.count == count);
  }
}

TEST_CASE("subset counts bound independence after edge deletions") {
  // min count >= r + 1 over t-sets means no t-set becomes independent
  // after deleting r edges.
  CounterRng rng(Seed{43});
  int exercised = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 6 + static_cast<int>(rng.below(7));
    const Graph g = random_graph(n, 0.5 + 0.45 * rng.uniform_open_closed(), rng);
    const int t = 3;
    const int count = min_subset_edges(g, t).count;
    if (count < 1 || g.edge_count() == 0) continue;
    const int r = count - 1;
    const auto edges = g.edges();
    for (int sample = 0; sample < 50; ++sample) {
      std::vector<GraphEdge> removed;
      for (int i = 0; i < r; ++i) {
        const auto& e = edges[rng.below(edges.size())];
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) removed.push_back(e);
      }
      CHECK(exact_independence(delete_edges(g, removed)) <= t - 1);
      ++exercised;
    }
  }
  CHECK(exercised > 0);
}

TEST_CASE("proper colouring checks") {
  const Graph c5 = cycle_graph(5);
  CHECK(is_proper_coloring(c5, {0, 1, 0, 1, 2}));
  CHECK_FALSE(is_proper_coloring(c5, {0, 1, 0, 1, 0}));
  CHECK(is_proper_coloring(c5, {0, 1, 0, 1, kUncolored}));
  CHECK_FALSE(is_proper_coloring(c5, {0, 1, 0, 1}));
  CHECK(colors_used({0, 3, 3, kUncolored}) == 2);
}

TEST_CASE("verify_construction on the cyclic instance") {
  const auto params = derive_params(1, 3);
  REQUIRE(params.n == 9);
  const Certificate c = verify_construction(cyclic_runs(), params);
  CHECK(c.matchability.all_matchable);
  REQUIRE(c.sparsity);
  CHECK_FALSE(c.sparsity->holds);
  REQUIRE(c.min_subset_edges);
  CHECK(c.min_subset_edges->count == 1);
  CHECK(c.conclusions.chi == 3);
  CHECK(c.conclusions.vertex_critical);
  CHECK_FALSE(c.conclusions.robust_to_r);

  // independent oracles on G
  CHECK(oracle::chromatic_number(c.graph) == 3);
  CHECK(exact_chromatic(c.graph) == 3);
  CHECK(exact_independence(c.graph) <= params.s);
  for (Vertex v = 0; v < 9; ++v) {
    const std::vector<Vertex> w{v};
    CHECK(exact_chromatic(delete_vertices(c.graph, w).graph) == 2);
    const Coloring& col = *c.colorings[v];
    CHECK(is_proper_coloring(c.graph, col));
    CHECK(colors_used(col) == 2);
  }
  CHECK(check_certificate(c).ok);
}

TEST_CASE("verify_construction examples") {
  const auto params = derive_params(1, 3);
  // vertex 8 isolated: every H - v with v != 8 leaves it uncovered
  const Hypergraph lonely(9, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  const Certificate a = verify_construction(lonely, params);
  CHECK_FALSE(a.conclusions.robust_to_r);
  CHECK_FALSE(a.matchability.all_matchable);
  CHECK(a.matchability.first_failure() == 0);
  CHECK(a.matchability.per_vertex[8].status == VertexStatus::matched);
  CHECK(check_certificate(a).ok);

  const Certificate full = verify_construction(complete_uniform(9, 4), params);
  CHECK(full.matchability.all_matchable);
  CHECK_FALSE(full.sparsity->holds);
  CHECK(full.sparsity->violator.has_value());
  CHECK_FALSE(full.conclusions.robust_to_r);
  CHECK_FALSE(full.conclusions.chi.has_value());  // G is edgeless
  CHECK(check_certificate(full).ok);

  CHECK_THROWS_AS(verify_construction(complete_uniform(8, 4), params), std::invalid_argument);
  CHECK_THROWS_AS(verify_construction(complete_uniform(9, 3), params), std::invalid_argument);

  VerifyOptions early;
  early.stop_at_first_failure = true;
  const Certificate quick = verify_construction(complete_uniform(9, 4), params, early);
  CHECK_FALSE(quick.sparsity->holds);
  CHECK(quick.matchability.per_vertex[0].status == VertexStatus::not_run);
  CHECK_FALSE(quick.min_subset_edges.has_value());
  CHECK(check_certificate(quick).ok);
}

TEST_CASE("certified chromatic claims hold on random instances") {
  const auto params = derive_params(1, 3);
  CounterRng rng(Seed{44});
  int certified = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const double p = 0.03 + 0.1 * rng.uniform_open_closed();
    const Hypergraph h = sample_hypergraph(params.n, params.s, p, derive(Seed{44}, trial));
    const Certificate c = verify_construction(h, params);
    if (!c.conclusions.chi) continue;
    ++certified;
    CHECK(oracle::chromatic_number(c.graph) == params.k);
    CHECK(oracle::independence_number(c.graph) <= params.s);
    if (c.conclusions.vertex_critical) {
      for (Vertex v = 0; v < params.n; ++v) {
        const std::vector<Vertex> w{v};
        CHECK(oracle::chromatic_number(delete_vertices(c.graph, w).graph) == params.k - 1);
      }
    }
  }
  CHECK(certified > 0);
}

TEST_CASE("check_certificate rejects tampering") {
  const auto params = derive_params(1, 3);
  const Certificate good = verify_construction(cyclic_runs(), params);
  REQUIRE(check_certificate(good).ok);

  SUBCASE("matching edge tampered") {
    Certificate c = good;
    c.matchability.per_vertex[0].matching->edges[0] = c.matchability.per_vertex[0].matching->edges[1];
    const auto check = check_certificate(c);
    CHECK_FALSE(check.ok);
    CHECK(has_reason(check, "matching not disjoint/covering"));
  }
  SUBCASE("min count lowered, conclusions kept") {
    Certificate c = good;
    c.min_subset_edges->count = 0;
    const auto check = check_certificate(c);
    CHECK_FALSE(check.ok);
    CHECK(has_reason(check, "conclusion mismatch"));
  }
  SUBCASE("forged robustness claim") {
    Certificate c = good;
    c.sparsity = SparsityVerdict{true, std::nullopt, params.m, params.s};
    c.min_subset_edges->count = 2;
    c.conclusions = derive_conclusions(c);
    REQUIRE(c.conclusions.robust_to_r);
    const auto check = check_certificate(c);
    CHECK_FALSE(check.ok);
    CHECK(has_reason(check, "sparsity verdict mismatch"));
    CHECK(has_reason(check, "subset witness count mismatch"));
  }
  SUBCASE("graph edited") {
    Certificate c = good;
    c.graph = complement(c.graph);
    CHECK(has_reason(check_certificate(c), "graph is not the complement of the 2-section"));
  }
  SUBCASE("colouring edited") {
    Certificate c = good;
    std::swap((*c.colorings[2])[0], (*c.colorings[2])[4]);
    CHECK(has_reason(check_certificate(c), "coloring does not match its matching"));
  }
  SUBCASE("matchability flag flipped") {
    Certificate c = good;
    c.matchability.per_vertex[3].status = VertexStatus::no_matching;
    c.matchability.per_vertex[3].matching.reset();
    c.colorings[3].reset();
    const auto check = check_certificate(c);
    CHECK(has_reason(check, "matchability flag mismatch"));
  }
  SUBCASE("parameters edited") {
    Certificate c = good;
    c.params.q *= 2;
    CHECK(has_reason(check_certificate(c), "parameters inconsistent"));
  }
}

#include "critgraph/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <stdexcept>

#include "critgraph/parallel.hpp"

namespace critgraph {

namespace {

// Lexicographic scan of t-subsets whose smallest element is fixed, with an
// incremental edge count per depth.
class SubsetScan {
 public:
  SubsetScan(const std::vector<std::uint8_t>& adj, int n, int t, std::optional<int> stop,
             const std::atomic<int>& global_best)
      : adj_(adj), n_(n), t_(t), stop_(stop), global_best_(global_best),
        chosen_(static_cast<std::size_t>(t)), partial_(static_cast<std::size_t>(t), 0) {}

  void run(int first) {
    chosen_[0] = first;
    partial_[0] = 0;
    if (t_ == 1) {
      consider();
      return;
    }
    descend(1);
  }

  int best() const { return best_; }
  const VertexSet& witness() const { return witness_; }
  bool hit() const { return hit_; }

 private:
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u * n_ + v)] != 0; }

  void consider() {
    const int count = partial_[t_ - 1];
    if (count < best_) {
      best_ = count;
      witness_.assign(chosen_.begin(), chosen_.end());
      if (stop_ && count <= *stop_) hit_ = true;
    }
  }

  void descend(int depth) {
    for (int v = chosen_[depth - 1] + 1; v <= n_ - (t_ - depth); ++v) {
      int add = 0;
      for (int j = 0; j < depth; ++j) add += adjacent(v, chosen_[j]);
      const int count = partial_[depth - 1] + add;
      // Counts only grow with depth; ties never beat an earlier witness.
      if (count >= best_ || count > global_best_.load(std::memory_order_relaxed)) continue;
      chosen_[depth] = v;
      partial_[depth] = count;
      if (depth + 1 == t_) {
        consider();
      } else {
        descend(depth + 1);
      }
      if (hit_) return;
    }
  }

  const std::vector<std::uint8_t>& adj_;
  int n_;
  int t_;
  std::optional<int> stop_;
  const std::atomic<int>& global_best_;
  std::vector<int> chosen_;
  std::vector<int> partial_;
  int best_ = INT_MAX;
  VertexSet witness_;
  bool hit_ = false;
};

bool all_distinct_in_range(const VertexSet& x, int n) {
  VertexSet sorted = x;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
         (sorted.empty() || (sorted.front() >= 0 && sorted.back() < n));
}

int count_induced_edges(const Graph& g, const VertexSet& x) {
  int count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) count += g.adjacent(x[i], x[j]);
  }
  return count;
}

}  // namespace

SubsetEdgeCount min_subset_edges(const Graph& g, int t, int workers,
                                 std::optional<int> stop_at_or_below) {
  const int n = g.n();
  if (t < 1 || t > n) throw std::invalid_argument("subset size must lie in [1, n]");
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n * n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u * n + v)] = 1;
    adj[static_cast<std::size_t>(v * n + u)] = 1;
  }

  const std::size_t chunks = static_cast<std::size_t>(n - t + 1);
  std::vector<int> best(chunks, INT_MAX);
  std::vector<VertexSet> witness(chunks);
  std::atomic<int> global_best{INT_MAX};
  std::atomic<int> first_hit{static_cast<int>(chunks)};

  parallel_for(chunks, workers, [&](std::size_t first) {
    if (static_cast<int>(first) > first_hit.load()) return;
    SubsetScan scan(adj, n, t, stop_at_or_below, global_best);
    scan.run(static_cast<int>(first));
    best[first] = scan.best();
    witness[first] = scan.witness();
    int current = global_best.load();
    while (scan.best() < current && !global_best.compare_exchange_weak(current, scan.best())) {
    }
    if (scan.hit()) {
      int lowest = first_hit.load();
      while (static_cast<int>(first) < lowest &&
             !first_hit.compare_exchange_weak(lowest, static_cast<int>(first))) {
      }
    }
  });

  SubsetEdgeCount result;
  if (first_hit.load() < static_cast<int>(chunks)) {
    const auto hit = static_cast<std::size_t>(first_hit.load());
    result.count = best[hit];
    result.witness = witness[hit];
    result.exhaustive = false;
    return result;
  }
  std::size_t arg = 0;
  for (std::size_t i = 1; i < chunks; ++i) {
    if (best[i] < best[arg]) arg = i;
  }
  result.count = best[arg];
  result.witness = witness[arg];
  return result;
}

SubsetEdgeCount max_subset_edges(const Graph& g, int t, int workers) {
  SubsetEdgeCount result = min_subset_edges(complement(g), t, workers);
  result.count = t * (t - 1) / 2 - result.count;
  return result;
}

bool is_proper_coloring(const Graph& g, const Coloring& colors) {
  if (static_cast<int>(colors.size()) != g.n()) return false;
  for (int c : colors) {
    if (c < 0 && c != kUncolored) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (colors[u] != kUncolored && colors[u] == colors[v]) return false;
  }
  return true;
}

int colors_used(const Coloring& colors) {
  std::vector<int> distinct;
  for (int c : colors) {
    if (c != kUncolored) distinct.push_back(c);
  }
  std::sort(distinct.begin(), distinct.end());
  return static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
}

Conclusions derive_conclusions(const Certificate& c) {
  Conclusions out;
  const bool scanned = c.min_subset_edges && c.min_subset_edges->exhaustive;
  const bool alpha_at_most_s = scanned && c.min_subset_edges->count >= 1;
  const bool some_matched = std::any_of(
      c.matchability.per_vertex.begin(), c.matchability.per_vertex.end(),
      [](const VertexMatchability& v) { return v.status == VertexStatus::matched; });
  if (alpha_at_most_s && some_matched) out.chi = c.params.k;
  out.vertex_critical = out.chi.has_value() && c.matchability.all_matchable;
  out.robust_to_r = c.matchability.all_matchable && c.sparsity && c.sparsity->holds && scanned &&
                    c.min_subset_edges->count >= c.params.r + 1;
  return out;
}

Certificate verify_construction(const Hypergraph& h, const ConstructionParams& params,
                                const VerifyOptions& options) {
  if (h.n() != params.n) throw std::invalid_argument("hypergraph vertex count differs from n");
  if (!h.is_uniform(params.s)) throw std::invalid_argument("hypergraph is not s-uniform");

  Certificate c;
  c.params = params;
  c.hypergraph = h;
  c.graph = complement(two_section(h));
  c.matchability.per_vertex.resize(static_cast<std::size_t>(h.n()));
  for (Vertex v = 0; v < h.n(); ++v) c.matchability.per_vertex[v].vertex = v;
  c.colorings.resize(static_cast<std::size_t>(h.n()));

  bool failed = false;
  for (Stage stage : options.order) {
    if (failed && options.stop_at_first_failure) break;
    switch (stage) {
      case Stage::sparsity:
        c.sparsity = check_sparsity(h, params.m, params.s, options.workers);
        failed |= !c.sparsity->holds;
        break;
      case Stage::matchability: {
        MatchabilityOptions mo{options.matching, options.workers, options.stop_at_first_failure};
        c.matchability = all_deletions_matchable(h, params.s, mo);
        for (const VertexMatchability& v : c.matchability.per_vertex) {
          if (v.matching) c.colorings[v.vertex] = matching_to_coloring(*v.matching, v.vertex, h.n());
        }
        failed |= !c.matchability.all_matchable;
        break;
      }
      case Stage::subset_scan: {
        std::optional<int> stop;
        if (options.stop_at_first_failure) stop = params.r;
        c.min_subset_edges = min_subset_edges(c.graph, params.s + 1, options.workers, stop);
        failed |= c.min_subset_edges->count <= params.r;
        break;
      }
    }
  }
  c.conclusions = derive_conclusions(c);
  return c;
}

int stages_passed(const Certificate& c) {
  int passed = 0;
  passed += c.sparsity && c.sparsity->holds;
  passed += c.matchability.all_matchable;
  passed += c.min_subset_edges && c.min_subset_edges->exhaustive &&
            c.min_subset_edges->count >= c.params.r + 1;
  return passed;
}

CertificateCheck check_certificate(const Certificate& c, int workers) {
  CertificateCheck check;
  auto fail = [&](std::string reason) {
    check.ok = false;
    if (std::find(check.reasons.begin(), check.reasons.end(), reason) == check.reasons.end()) {
      check.reasons.push_back(std::move(reason));
    }
  };

  const ConstructionParams& params = c.params;
  try {
    if (derive_params(params.r, params.k, params.C) != params) fail("parameters inconsistent");
  } catch (const std::exception&) {
    fail("parameters invalid");
    return check;
  }
  const int n = params.n;
  if (c.hypergraph.n() != n || !c.hypergraph.is_uniform(params.s)) {
    fail("hypergraph dimension mismatch");
    return check;
  }
  if (c.graph != complement(two_section(c.hypergraph))) {
    fail("graph is not the complement of the 2-section");
    return check;
  }

  // Matchings and colourings.
  const auto& per_vertex = c.matchability.per_vertex;
  bool all_matched = static_cast<int>(per_vertex.size()) == n;
  if (static_cast<int>(per_vertex.size()) != n || static_cast<int>(c.colorings.size()) != n) {
    fail("matchability report has wrong size");
  } else {
    for (Vertex v = 0; v < n; ++v) {
      const VertexMatchability& entry = per_vertex[v];
      if (entry.vertex != v) fail("matchability report out of order");
      if (entry.status != VertexStatus::matched) {
        all_matched = false;
        if (entry.matching || c.colorings[v]) fail("witness attached to unmatched vertex");
        continue;
      }
      if (!entry.matching) {
        fail("matched vertex without witness");
        continue;
      }
      for (const Edge& e : entry.matching->edges) {
        if (!c.hypergraph.find_edge(e)) fail("matching uses a non-hyperedge");
      }
      Coloring expected;
      try {
        const Matching recheck = Matching::from_edges(entry.matching->edges);
        expected = matching_to_coloring(recheck, v, n);
      } catch (const std::invalid_argument&) {
        fail("matching not disjoint/covering");
        continue;
      }
      if (!c.colorings[v] || *c.colorings[v] != expected) {
        fail("coloring does not match its matching");
        continue;
      }
      if (!is_proper_coloring(c.graph, expected) || colors_used(expected) != params.k - 1) {
        fail("coloring is not a proper (k-1)-coloring of G - v");
      }
    }
  }
  if (c.matchability.all_matchable != all_matched) fail("matchability flag mismatch");

  if (c.sparsity) {
    if (c.sparsity->m != params.m || c.sparsity->s != params.s) fail("sparsity window mismatch");
    if (check_sparsity(c.hypergraph, params.m, params.s, workers) != *c.sparsity) {
      fail("sparsity verdict mismatch");
    }
  }

  if (c.min_subset_edges) {
    const SubsetEdgeCount& claimed = *c.min_subset_edges;
    if (static_cast<int>(claimed.witness.size()) != params.s + 1 ||
        !all_distinct_in_range(claimed.witness, n) ||
        count_induced_edges(c.graph, claimed.witness) != claimed.count) {
      fail("subset witness count mismatch");
    }
    if (claimed.exhaustive) {
      const SubsetEdgeCount actual = min_subset_edges(c.graph, params.s + 1, workers);
      if (actual.count != claimed.count || actual.witness != claimed.witness) {
        fail("subset minimum mismatch");
      }
    }
  }

  if (derive_conclusions(c) != c.conclusions) fail("conclusion mismatch");
  return check;
}

}  // namespace critgraph

#include "critgraph/matching.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <stdexcept>

#include "critgraph/parallel.hpp"

namespace critgraph {

namespace {

using Clock = std::chrono::steady_clock;

class CoverSearch {
 public:
  CoverSearch(const Hypergraph& h, int s, Clock::time_point deadline)
      : h_(h), s_(s), deadline_(deadline), incident_(static_cast<std::size_t>(h.n())),
        blocked_(h.edge_count(), 0), covered_(static_cast<std::size_t>(h.n()), 0) {
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      for (Vertex v : h.edge(i)) incident_[v].push_back(static_cast<int>(i));
    }
  }

  bool run() { return search(h_.n()); }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

  Matching matching() const {
    std::vector<Edge> edges;
    for (int i : chosen_) edges.push_back(h_.edge(static_cast<std::size_t>(i)));
    return Matching::from_edges(std::move(edges));
  }

 private:
  void cover(int e, int delta) {
    for (Vertex v : h_.edge(static_cast<std::size_t>(e))) {
      covered_[v] = delta > 0;
      for (int f : incident_[v]) blocked_[f] += delta;
    }
  }

  bool search(int uncovered) {
    if (uncovered == 0) return true;
    if ((++nodes_ & 1023U) == 0 && Clock::now() > deadline_) exhausted_ = true;
    if (exhausted_ || uncovered % s_ != 0) return false;

    Vertex pick = -1;
    int fewest = INT_MAX;
    for (Vertex v = 0; v < h_.n(); ++v) {
      if (covered_[v]) continue;
      int usable = 0;
      for (int e : incident_[v]) {
        if (blocked_[e] == 0 && ++usable >= fewest) break;
      }
      if (usable == 0) return false;
      if (usable < fewest) {
        fewest = usable;
        pick = v;
      }
    }

    for (int e : incident_[pick]) {
      if (blocked_[e] != 0) continue;
      cover(e, +1);
      chosen_.push_back(e);
      if (search(uncovered - s_)) return true;
      chosen_.pop_back();
      cover(e, -1);
      if (exhausted_) return false;
    }
    return false;
  }

  const Hypergraph& h_;
  int s_;
  Clock::time_point deadline_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> blocked_;
  std::vector<char> covered_;
  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

MatchingResult find_perfect_matching(const Hypergraph& h, const MatchingOptions& options) {
  MatchingResult result;
  if (h.n() == 0) {
    result.outcome = SearchOutcome::found;
    result.matching = Matching{};
    return result;
  }
  if (h.edge_count() == 0) return result;
  const auto s = h.uniformity();
  if (!s) throw std::invalid_argument("perfect matching search needs a uniform hypergraph");
  if (h.n() % *s != 0) return result;

  CoverSearch search(h, *s, Clock::now() + options.budget);
  const bool found = search.run();
  result.nodes = search.nodes();
  if (found) {
    result.outcome = SearchOutcome::found;
    result.matching = search.matching();
  } else if (search.exhausted()) {
    result.outcome = SearchOutcome::budget_exhausted;
  }
  return result;
}

bool MatchabilityReport::inconclusive() const {
  return std::any_of(per_vertex.begin(), per_vertex.end(), [](const VertexMatchability& v) {
    return v.status == VertexStatus::budget_exhausted;
  });
}

std::optional<Vertex> MatchabilityReport::first_failure() const {
  for (const VertexMatchability& v : per_vertex) {
    if (v.status == VertexStatus::no_matching || v.status == VertexStatus::budget_exhausted) {
      return v.vertex;
    }
  }
  return std::nullopt;
}

MatchabilityReport all_deletions_matchable(const Hypergraph& h, int s,
                                           const MatchabilityOptions& options) {
  if (s < 1) throw std::invalid_argument("uniformity must be positive");
  if (!h.is_uniform(s)) throw std::invalid_argument("hypergraph is not s-uniform");
  if (h.n() % s != 1 % s) {
    throw std::invalid_argument("vertex count must be 1 modulo s for deletion matchings");
  }

  const int n = h.n();
  MatchabilityReport report;
  report.per_vertex.resize(static_cast<std::size_t>(n));
  std::atomic<int> lowest_failure{n};

  parallel_for(static_cast<std::size_t>(n), options.workers, [&](std::size_t i) {
    const Vertex v = static_cast<Vertex>(i);
    VertexMatchability& slot = report.per_vertex[i];
    slot.vertex = v;
    if (options.stop_at_first_failure && v > lowest_failure.load()) return;

    const RemappedHypergraph rest = delete_vertex(h, v);
    MatchingResult found = find_perfect_matching(rest.hypergraph, options.matching);
    switch (found.outcome) {
      case SearchOutcome::found: {
        std::vector<Edge> edges = std::move(found.matching->edges);
        for (Edge& e : edges) {
          for (Vertex& u : e) u = rest.original[u];
        }
        slot.matching = Matching::from_edges(std::move(edges));
        slot.status = VertexStatus::matched;
        return;
      }
      case SearchOutcome::none:
        slot.status = VertexStatus::no_matching;
        break;
      case SearchOutcome::budget_exhausted:
        slot.status = VertexStatus::budget_exhausted;
        break;
    }
    int current = lowest_failure.load();
    while (v < current && !lowest_failure.compare_exchange_weak(current, v)) {
    }
  });

  if (options.stop_at_first_failure) {
    for (VertexMatchability& slot : report.per_vertex) {
      if (slot.vertex > lowest_failure.load()) {
        slot.status = VertexStatus::not_run;
        slot.matching.reset();
      }
    }
  }
  report.all_matchable = std::all_of(
      report.per_vertex.begin(), report.per_vertex.end(),
      [](const VertexMatchability& v) { return v.status == VertexStatus::matched; });
  return report;
}

Coloring matching_to_coloring(const Matching& m, Vertex removed, int n) {
  if (removed < 0 || removed >= n) throw std::invalid_argument("removed vertex out of range");
  Coloring colors(static_cast<std::size_t>(n), kUncolored);
  int assigned = 0;
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    for (Vertex v : m.edges[i]) {
      if (v < 0 || v >= n || v == removed || colors[v] != kUncolored) {
        throw std::invalid_argument("matching does not partition V minus the removed vertex");
      }
      colors[v] = static_cast<int>(i);
      ++assigned;
    }
  }
  if (assigned != n - 1) {
    throw std::invalid_argument("matching does not partition V minus the removed vertex");
  }
  return colors;
}

}  // namespace critgraph

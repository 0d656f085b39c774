#include "critgraph/sparsity.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "critgraph/errors.hpp"
#include "critgraph/parallel.hpp"
#include "critgraph/sampler.hpp"

namespace critgraph {

namespace {

void check_uniform(const Hypergraph& h, int s) {
  if (s < 3) throw std::invalid_argument("sparsity check needs s >= 3");
  if (!h.is_uniform(s)) throw std::invalid_argument("hypergraph is not s-uniform");
}

int span_of(const Hypergraph& h, std::span<const std::size_t> f) {
  std::vector<Vertex> all;
  for (std::size_t i : f) {
    if (i >= h.edge_count()) throw std::invalid_argument("edge index out of range");
    all.insert(all.end(), h.edge(i).begin(), h.edge(i).end());
  }
  std::sort(all.begin(), all.end());
  return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

// Edge-intersection graph: edges i and j adjacent iff they share a vertex.
// Rows are built on first use; a dense sample usually fails on a set found
// from the first few roots.
class IntersectionGraph {
 public:
  explicit IntersectionGraph(const Hypergraph& h)
      : h_(h), incident_(static_cast<std::size_t>(h.n())), rows_(h.edge_count()),
        ready_(h.edge_count()) {
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      for (Vertex v : h.edge(i)) incident_[v].push_back(static_cast<int>(i));
    }
  }

  const std::vector<int>& operator[](int e) const {
    std::call_once(ready_[static_cast<std::size_t>(e)], [&] {
      std::vector<int>& row = rows_[static_cast<std::size_t>(e)];
      for (Vertex v : h_.edge(static_cast<std::size_t>(e))) {
        for (int j : incident_[v]) {
          if (j != e) row.push_back(j);
        }
      }
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    });
    return rows_[static_cast<std::size_t>(e)];
  }

 private:
  const Hypergraph& h_;
  std::vector<std::vector<int>> incident_;
  mutable std::vector<std::vector<int>> rows_;
  mutable std::vector<std::once_flag> ready_;
};

// Extension-set enumeration of connected edge sets of exactly `limit`
// edges whose smallest index is `root`, tracking the excess incrementally.
class ConnectedSetSearch {
 public:
  ConnectedSetSearch(const Hypergraph& h, const IntersectionGraph& adjacent, int s,
                     int limit)
      : h_(h), adjacent_(adjacent), s_(s), limit_(limit),
        vertex_uses_(static_cast<std::size_t>(h.n()), 0), touching_(h.edge_count(), 0),
        in_set_(h.edge_count(), 0) {}

  // Lexicographically smallest violator rooted at `root`, if any.
  std::optional<std::vector<std::size_t>> run(int root) {
    best_.reset();
    root_ = root;
    add(root);
    std::vector<int> extension;
    for (int u : adjacent_[root]) {
      if (u > root) extension.push_back(u);
    }
    if (static_cast<int>(members_.size()) < limit_) extend(std::move(extension));
    remove(root);
    return best_;
  }

  bool reached_limit() const { return reached_limit_; }

 private:
  void add(int e) {
    in_set_[e] = 1;
    members_.push_back(e);
    for (int u : adjacent_[e]) ++touching_[u];
    int fresh = 0;
    for (Vertex v : h_.edge(static_cast<std::size_t>(e))) fresh += vertex_uses_[v]++ == 0;
    // A new edge meeting the union in t vertices changes the excess by 1 - t.
    excess_ += 1 - (s_ - fresh);
  }

  void remove(int e) {
    int fresh = 0;
    for (Vertex v : h_.edge(static_cast<std::size_t>(e))) fresh += --vertex_uses_[v] == 0;
    excess_ -= 1 - (s_ - fresh);
    for (int u : adjacent_[e]) --touching_[u];
    members_.pop_back();
    in_set_[e] = 0;
  }

  void record() {
    std::vector<std::size_t> sorted(members_.begin(), members_.end());
    std::sort(sorted.begin(), sorted.end());
    if (!best_ || sorted < *best_) best_ = std::move(sorted);
  }

  void extend(std::vector<int> extension) {
    while (!extension.empty()) {
      const int w = extension.back();
      extension.pop_back();
      if (static_cast<int>(members_.size()) + 1 == limit_) {
        // Last edge: only the excess matters, not its neighbourhood.
        int fresh = 0;
        for (Vertex v : h_.edge(static_cast<std::size_t>(w))) fresh += vertex_uses_[v] == 0;
        if (excess_ + 1 - (s_ - fresh) < 0) {
          members_.push_back(w);
          record();
          members_.pop_back();
        }
        reached_limit_ = true;
        continue;
      }
      std::vector<int> next = extension;
      for (int u : adjacent_[w]) {
        if (u > root_ && !in_set_[u] && touching_[u] == 0) next.push_back(u);
      }
      add(w);
      if (excess_ < 0) {
        record();
      } else {
        extend(std::move(next));
      }
      remove(w);
    }
  }

  const Hypergraph& h_;
  const IntersectionGraph& adjacent_;
  int s_;
  int limit_;
  int root_ = 0;
  int excess_ = 0;
  std::vector<int> vertex_uses_;
  std::vector<int> touching_;
  std::vector<char> in_set_;
  std::vector<int> members_;
  std::optional<std::vector<std::size_t>> best_;
  bool reached_limit_ = false;
};

SparsityVerdict violated(const Hypergraph& h, std::vector<std::size_t> edges, int m, int s) {
  SparsityVerdict verdict{false, SparsityViolator{std::move(edges), 0}, m, s};
  verdict.violator->span = span_of(h, verdict.violator->edges);
  return verdict;
}

}  // namespace

int excess(const Hypergraph& h, std::span<const std::size_t> f, int s) {
  return span_of(h, f) - (s - 1) * static_cast<int>(f.size());
}

SparsityVerdict check_sparsity(const Hypergraph& h, int m, int s, int workers) {
  check_uniform(h, s);
  if (m < 1) throw std::invalid_argument("sparsity window must be positive");
  const IntersectionGraph adjacent(h);
  const int edge_count = static_cast<int>(h.edge_count());

  // Single edges have excess 1, so violators have at least two edges.
  for (int limit = 2; limit <= std::min(m, edge_count); ++limit) {
    std::vector<std::optional<std::vector<std::size_t>>> found(h.edge_count());
    std::atomic<int> first_root{edge_count};
    std::atomic<bool> any_full{false};
    // Contiguous root ranges share one search state each.
    const std::size_t chunks =
        std::min<std::size_t>(h.edge_count(), static_cast<std::size_t>(std::max(workers, 1)) * 8);
    parallel_for(chunks, workers, [&](std::size_t chunk) {
      ConnectedSetSearch search(h, adjacent, s, limit);
      const std::size_t begin = chunk * h.edge_count() / chunks;
      const std::size_t end = (chunk + 1) * h.edge_count() / chunks;
      for (std::size_t root = begin; root < end; ++root) {
        if (static_cast<int>(root) > first_root.load()) return;
        found[root] = search.run(static_cast<int>(root));
        if (search.reached_limit()) any_full = true;
        if (found[root]) {
          int current = first_root.load();
          while (static_cast<int>(root) < current &&
                 !first_root.compare_exchange_weak(current, static_cast<int>(root))) {
          }
          return;
        }
      }
    });
    if (first_root.load() < edge_count) return violated(h, *found[first_root.load()], m, s);
    // No connected set of this size exists, so none of any larger size does.
    if (!any_full) break;
  }
  return SparsityVerdict{true, std::nullopt, m, s};
}

SparsityVerdict brute_force_sparsity(const Hypergraph& h, int m, int s, std::uint64_t cap) {
  check_uniform(h, s);
  if (m < 1) throw std::invalid_argument("sparsity window must be positive");
  const int e = static_cast<int>(h.edge_count());
  const int top = std::min(m, e);
  std::uint64_t total = 0;
  for (int size = 1; size <= top; ++size) {
    const std::uint64_t c = binomial(e, size);
    if (c > cap || total > cap - c) throw CapExceeded("sparsity enumeration exceeds cap");
    total += c;
  }

  for (int size = 1; size <= top; ++size) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[i] = static_cast<std::size_t>(i);
    for (;;) {
      if (excess(h, pick, s) < 0) return violated(h, pick, m, s);
      int i = size - 1;
      while (i >= 0 && pick[i] == static_cast<std::size_t>(e - size + i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return SparsityVerdict{true, std::nullopt, m, s};
}

bool is_inclusion_minimal_violator(const Hypergraph& h, const SparsityViolator& v, int s) {
  const std::size_t size = v.edges.size();
  if (size > 24) throw CapExceeded("violator too large for exhaustive minimality check");
  if (!std::is_sorted(v.edges.begin(), v.edges.end()) ||
      std::adjacent_find(v.edges.begin(), v.edges.end()) != v.edges.end()) {
    return false;
  }
  if (span_of(h, v.edges) != v.span || excess(h, v.edges, s) >= 0) return false;
  const std::uint32_t full = (1U << size) - 1;
  std::vector<std::size_t> subset;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < size; ++i) {
      if (mask >> i & 1U) subset.push_back(v.edges[i]);
    }
    if (excess(h, subset, s) < 0) return false;
  }
  return true;
}

}  // namespace critgraph

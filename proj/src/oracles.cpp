#include "critgraph/oracles.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <vector>

#include "critgraph/errors.hpp"

namespace critgraph::oracle {

namespace {

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long double acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(acc + 0.5L);
}

template <class Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return false;
  for (;;) {
    if (visit(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<std::uint32_t> masks(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  return adj;
}

}  // namespace

bool has_perfect_matching(const Hypergraph& h, std::uint64_t cap) {
  const int n = h.n();
  if (n == 0) return true;
  if (h.edge_count() == 0) return false;
  const int s = static_cast<int>(h.edge(0).size());
  if (n % s != 0) return false;
  const int e = static_cast<int>(h.edge_count());
  const int size = n / s;
  if (choose(e, size) > cap) throw CapExceeded("matching oracle: too many edge subsets");
  return for_each_combination(e, size, [&](const std::vector<int>& pick) {
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int i : pick) {
      for (Vertex v : h.edge(static_cast<std::size_t>(i))) {
        if (hit[v]) return false;
        hit[v] = 1;
      }
    }
    return true;
  });
}

int independence_number(const Graph& g) {
  if (g.n() > 24) throw CapExceeded("independence oracle: too many vertices");
  const auto adj = masks(g);
  int best = 0;
  for (std::uint32_t set = 0; set < (1U << g.n()); ++set) {
    bool independent = true;
    for (std::uint32_t rest = set; rest && independent; rest &= rest - 1) {
      independent = (adj[std::countr_zero(rest)] & set) == 0;
    }
    if (independent) best = std::max(best, std::popcount(set));
  }
  return best;
}

int chromatic_number(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw CapExceeded("chromatic oracle: too many vertices");
  const auto adj = masks(g);
  const std::uint32_t full = (1U << n) - 1;
  std::vector<char> independent(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t set = 0; set <= full; ++set) {
    bool ok = true;
    for (std::uint32_t rest = set; rest && ok; rest &= rest - 1) {
      ok = (adj[std::countr_zero(rest)] & set) == 0;
    }
    independent[set] = ok;
  }
  std::vector<int> colours(static_cast<std::size_t>(full) + 1, INT_MAX);
  colours[0] = 0;
  for (std::uint32_t set = 1; set <= full; ++set) {
    const std::uint32_t low = set & (~set + 1);
    // Colour classes containing the lowest vertex of `set`.
    for (std::uint32_t sub = set; sub; sub = (sub - 1) & set) {
      if ((sub & low) && independent[sub] && colours[set ^ sub] != INT_MAX) {
        colours[set] = std::min(colours[set], colours[set ^ sub] + 1);
      }
    }
  }
  return colours[full];
}

int min_subset_edge_count(const Graph& g, int t) {
  int best = INT_MAX;
  for_each_combination(g.n(), t, [&](const std::vector<int>& pick) {
    int count = 0;
    for (int a : pick) {
      for (int b : pick) count += a < b && g.adjacent(a, b);
    }
    best = std::min(best, count);
    return false;
  });
  return best;
}

bool has_small_cut(const Hypergraph& h) {
  const Graph g = two_section(h);
  const int n = g.n();
  for (int size = 0; size <= 2; ++size) {
    const bool found = for_each_combination(n, size, [&](const std::vector<int>& w) {
      std::vector<char> gone(static_cast<std::size_t>(n), 0);
      for (int v : w) gone[v] = 1;
      int start = -1;
      int remaining = 0;
      for (int v = 0; v < n; ++v) {
        if (!gone[v]) {
          ++remaining;
          if (start < 0) start = v;
        }
      }
      if (remaining < 2) return false;
      std::vector<int> stack{start};
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      seen[start] = 1;
      int reached = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
          if (!gone[u] && !seen[u]) {
            seen[u] = 1;
            ++reached;
            stack.push_back(u);
          }
        }
      }
      return reached < remaining;
    });
    if (found) return true;
  }
  return false;
}

}  // namespace critgraph::oracle

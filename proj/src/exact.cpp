#include "critgraph/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "critgraph/errors.hpp"

namespace critgraph {

namespace {

using Mask = std::uint64_t;

void check_cap(const Graph& g, int cap, const char* what) {
  if (cap > 64) throw CapExceeded(std::string(what) + ": cap above 64 is not supported");
  if (g.n() > cap) {
    throw CapExceeded(std::string(what) + ": graph has " + std::to_string(g.n()) +
                      " vertices, cap is " + std::to_string(cap));
  }
}

std::vector<Mask> adjacency_masks(const Graph& g, bool complemented) {
  const Mask all = g.n() == 64 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex u : g.neighbors(v)) adj[v] |= Mask{1} << u;
    if (complemented) adj[v] = ~adj[v] & all & ~(Mask{1} << v);
  }
  return adj;
}

// Maximum clique with greedy-colouring bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  int run() {
    if (adj_.empty()) return 0;
    const Mask all = adj_.size() == 64 ? ~Mask{0} : (Mask{1} << adj_.size()) - 1;
    best_ = 1;
    expand(all, 0);
    return best_;
  }

 private:
  void expand(Mask candidates, int size) {
    std::vector<int> order;
    std::vector<int> bound;
    Mask uncoloured = candidates;
    int colour = 0;
    while (uncoloured) {
      ++colour;
      Mask available = uncoloured;
      while (available) {
        const int v = std::countr_zero(available);
        available &= ~(Mask{1} << v) & ~adj_[v];
        uncoloured &= ~(Mask{1} << v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_) return;
      const int v = order[i];
      const Mask next = candidates & adj_[v];
      if (next == 0) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(next, size + 1);
      }
      candidates &= ~(Mask{1} << v);
    }
  }

  std::vector<Mask> adj_;
  int best_ = 0;
};

class ColouringSearch {
 public:
  ColouringSearch(const std::vector<Mask>& adj, int colours)
      : adj_(adj), k_(colours), n_(static_cast<int>(adj.size())),
        colour_(static_cast<std::size_t>(n_), -1),
        seen_(static_cast<std::size_t>(n_ * colours), 0), forbidden_(static_cast<std::size_t>(n_), 0) {}

  bool run() { return search(0, 0); }

 private:
  void assign(int v, int c, int delta) {
    Mask nb = adj_[v];
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      int& cnt = seen_[static_cast<std::size_t>(u * k_ + c)];
      if (delta > 0 && cnt++ == 0) forbidden_[u] |= Mask{1} << c;
      if (delta < 0 && --cnt == 0) forbidden_[u] &= ~(Mask{1} << c);
    }
    colour_[v] = delta > 0 ? c : -1;
  }

  bool search(int coloured, int used) {
    if (coloured == n_) return true;
    int pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      const int sat = std::popcount(forbidden_[v]);
      if (sat >= k_) return false;
      if (sat > best_sat || (sat == best_sat && std::popcount(adj_[v]) > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = std::popcount(adj_[v]);
      }
    }
    // Colours beyond `used` are interchangeable; only the first is tried.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden_[pick] >> c & 1U) continue;
      assign(pick, c, +1);
      if (search(coloured + 1, std::max(used, c + 1))) return true;
      assign(pick, c, -1);
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  int k_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> seen_;
  std::vector<Mask> forbidden_;
};

// Greedy DSATUR colour count, an upper bound on the chromatic number.
int dsatur_upper_bound(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<Mask> forbidden(static_cast<std::size_t>(n), 0);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      if (pick < 0 || std::popcount(forbidden[v]) > std::popcount(forbidden[pick]) ||
          (std::popcount(forbidden[v]) == std::popcount(forbidden[pick]) &&
           std::popcount(adj[v]) > std::popcount(adj[pick]))) {
        pick = v;
      }
    }
    const int c = std::countr_one(forbidden[pick]);
    colour[pick] = c;
    used = std::max(used, c + 1);
    Mask nb = adj[pick];
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      forbidden[u] |= Mask{1} << c;
    }
  }
  return used;
}

}  // namespace

int exact_independence(const Graph& g, int cap) {
  check_cap(g, cap, "exact_independence");
  return CliqueSearch(adjacency_masks(g, true)).run();
}

int clique_number(const Graph& g, int cap) {
  check_cap(g, cap, "clique_number");
  return CliqueSearch(adjacency_masks(g, false)).run();
}

int exact_chromatic(const Graph& g, int cap) {
  check_cap(g, cap, "exact_chromatic");
  if (g.n() == 0) return 0;
  const auto adj = adjacency_masks(g, false);
  const int lower = CliqueSearch(adj).run();
  const int upper = dsatur_upper_bound(adj);
  for (int k = lower; k < upper; ++k) {
    if (ColouringSearch(adj, k).run()) return k;
  }
  return upper;
}

}  // namespace critgraph

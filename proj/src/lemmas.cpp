#include "critgraph/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "critgraph/errors.hpp"
#include "critgraph/sampler.hpp"
#include "critgraph/sparsity.hpp"

namespace critgraph {

namespace {

VertexSet all_vertices(int n) {
  VertexSet v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Sides are the component of G - W holding its smallest vertex, and the rest.
CutWitness sides_after_removing(const Graph& g, VertexSet w) {
  const RemappedGraph rest = delete_vertices(g, w);
  CutWitness cut{std::move(w), {}, {}};
  const auto classes = components(rest.graph);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Vertex v : classes[i]) (i == 0 ? cut.side_a : cut.side_b).push_back(rest.original[v]);
  }
  std::sort(cut.side_b.begin(), cut.side_b.end());
  return cut;
}

void require_valid(const Hypergraph& h, const CutWitness& cut) {
  if (cut.w.size() > 2) throw CutConstructionFailure("cut set has more than two vertices", h);
  if (cut.side_a.empty() || cut.side_b.empty()) {
    throw CutConstructionFailure("cut leaves an empty side", h);
  }
  if (!is_valid_cut(h, cut)) throw CutConstructionFailure("cut does not disconnect", h);
}

}  // namespace

bool connected_bound_check(const Hypergraph& h) {
  if (!is_connected(two_section(h))) {
    throw std::invalid_argument("connected_bound_check needs a connected hypergraph");
  }
  long budget = 1;
  for (const Edge& e : h.edges()) budget += static_cast<long>(e.size()) - 1;
  return h.n() <= budget;
}

bool density_hypothesis_check(const Hypergraph& h, int max_edges) {
  const int e = static_cast<int>(h.edge_count());
  if (e > max_edges || e > 30) throw CapExceeded("density hypothesis check: too many edges");
  std::vector<int> seen(static_cast<std::size_t>(h.n()), 0);
  for (std::uint32_t mask = 1; mask < (1U << e); ++mask) {
    int stamp = static_cast<int>(mask);
    int union_size = 0;
    int weight = 0;
    for (int i = 0; i < e; ++i) {
      if (!(mask >> i & 1U)) continue;
      weight += static_cast<int>(h.edge(i).size()) - 1;
      for (Vertex v : h.edge(i)) {
        if (seen[v] != stamp) {
          seen[v] = stamp;
          ++union_size;
        }
      }
    }
    if (union_size < weight) return false;
  }
  return true;
}

CutWitness find_small_cut(const Hypergraph& h) {
  const int n = h.n();
  if (n < 4) throw std::invalid_argument("find_small_cut: fewer than 4 vertices");
  for (const Edge& e : h.edges()) {
    if (static_cast<int>(e.size()) == n) {
      throw std::invalid_argument("find_small_cut: the vertex set is a hyperedge");
    }
  }
  if (!density_hypothesis_check(h)) {
    throw std::invalid_argument("find_small_cut: density hypothesis fails");
  }
  const VertexSet everything = all_vertices(n);

  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge& e0 = h.edge(i);
    if (e0.size() < 3) continue;
    const Vertex v = minus(everything, e0).front();
    const auto classes = components(two_section(delete_hyperedge(h, i)));
    const VertexSet& c = *std::find_if(classes.begin(), classes.end(), [v](const VertexSet& cls) {
      return std::binary_search(cls.begin(), cls.end(), v);
    });
    CutWitness cut;
    std::set_intersection(e0.begin(), e0.end(), c.begin(), c.end(), std::back_inserter(cut.w));
    cut.side_a = minus(c, cut.w);
    cut.side_b = minus(everything, c);
    require_valid(h, cut);
    return cut;
  }

  // Every edge has at most two vertices: H is a graph once singletons go.
  std::vector<GraphEdge> pairs;
  for (const Edge& e : h.edges()) {
    if (e.size() == 2) pairs.emplace_back(e[0], e[1]);
  }
  const Graph g(n, pairs);
  CutWitness cut;
  if (!is_connected(g)) {
    cut = sides_after_removing(g, {});
  } else {
    const bool has_leaf = std::any_of(everything.begin(), everything.end(),
                                      [&](Vertex u) { return g.degree(u) == 1; });
    if (has_leaf) {
      // The leaf's neighbour always works; take the smallest cut vertex.
      for (Vertex x = 0; x < n; ++x) {
        cut = sides_after_removing(g, {x});
        if (!cut.side_b.empty()) break;
      }
    } else {
      for (Vertex u = 0; u < n; ++u) {
        if (g.degree(u) != 2) throw CutConstructionFailure("graph case is not 2-regular", h);
      }
      Vertex other = 1;
      while (g.adjacent(0, other)) ++other;
      cut = sides_after_removing(g, {0, other});
    }
  }
  require_valid(h, cut);
  return cut;
}

bool is_valid_cut(const Hypergraph& h, const CutWitness& cut) {
  const int n = h.n();
  if (cut.w.size() > 2 || cut.side_a.empty() || cut.side_b.empty()) return false;
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  auto mark = [&](const VertexSet& part, int tag) {
    for (Vertex v : part) {
      if (v < 0 || v >= n || label[v] != -1) return false;
      label[v] = tag;
    }
    return true;
  };
  if (!mark(cut.w, 0) || !mark(cut.side_a, 1) || !mark(cut.side_b, 2)) return false;
  if (std::count(label.begin(), label.end(), -1) != 0) return false;

  const RemappedGraph rest = delete_vertices(two_section(h), cut.w);
  for (const VertexSet& cls : components(rest.graph)) {
    const int tag = label[rest.original[cls.front()]];
    for (Vertex v : cls) {
      if (label[rest.original[v]] != tag) return false;
    }
  }
  return true;
}

EdgeBoundResult edge_bound_check(const Hypergraph& h, int s) {
  if (s < 3) throw std::invalid_argument("edge_bound_check needs s >= 3");
  if (!h.is_uniform(s)) throw std::invalid_argument("hypergraph is not s-uniform");
  if (h.n() < s + 1) throw std::invalid_argument("need at least s + 1 vertices");
  if (!check_sparsity(h, (1 << (s + 1)) - 1, s).holds) {
    throw HypothesisNotMet("sparsity fails for some F with |F| < 2^(s+1)");
  }
  const SubsetEdgeCount worst = max_subset_edges(two_section(h), s + 1);
  EdgeBoundResult result;
  result.bound = s * (s - 1) / 2 + 2;
  result.worst = worst.witness;
  result.worst_count = worst.count;
  result.holds = worst.count <= result.bound;
  return result;
}

HypergraphEnumerator::HypergraphEnumerator(int n, int max_edges, std::set<int> sizes,
                                           std::uint64_t cap)
    : n_(n), max_edges_(max_edges) {
  if (n < 0 || max_edges < 0) throw std::invalid_argument("negative enumeration bounds");
  if (n > 20) throw CapExceeded("enumeration supports at most 20 vertices");
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (!sizes.count(std::popcount(mask))) continue;
    Edge e;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) e.push_back(v);
    }
    candidates_.push_back(std::move(e));
  }
  std::sort(candidates_.begin(), candidates_.end());
  const int c = static_cast<int>(candidates_.size());
  for (int i = 0; i <= std::min(max_edges, c); ++i) {
    std::uint64_t term = 0;
    try {
      term = binomial(c, i);
    } catch (const std::overflow_error&) {
      throw CapExceeded("hypergraph enumeration exceeds cap");
    }
    if (term > cap || total_ > cap - term) throw CapExceeded("hypergraph enumeration exceeds cap");
    total_ += term;
  }
}

std::optional<Hypergraph> HypergraphEnumerator::next() {
  if (done_) return std::nullopt;
  const int c = static_cast<int>(candidates_.size());
  if (!started_) {
    started_ = true;
  } else {
    // Advance to the next combination, or to the first one of the next size.
    int i = size_ - 1;
    while (i >= 0 && pick_[i] == c - size_ + i) --i;
    if (i >= 0) {
      ++pick_[i];
      for (int j = i + 1; j < size_; ++j) pick_[j] = pick_[j - 1] + 1;
    } else {
      ++size_;
      if (size_ > std::min(max_edges_, c)) {
        done_ = true;
        return std::nullopt;
      }
      pick_.resize(static_cast<std::size_t>(size_));
      for (int j = 0; j < size_; ++j) pick_[j] = j;
    }
  }
  std::vector<Edge> edges;
  edges.reserve(pick_.size());
  for (int i : pick_) edges.push_back(candidates_[static_cast<std::size_t>(i)]);
  return Hypergraph(n_, std::move(edges));
}

}  // namespace critgraph

#include "critgraph/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "critgraph/errors.hpp"
#include "critgraph/lemmas.hpp"
#include "critgraph/matching.hpp"
#include "critgraph/oracles.hpp"
#include "critgraph/sampler.hpp"
#include "critgraph/sparsity.hpp"

namespace critgraph {

namespace {

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

int uniform_in(CounterRng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add(SuiteReport& report, std::string kind, std::string detail, const Hypergraph& h) {
  report.counterexamples.push_back(Counterexample{std::move(kind), std::move(detail), h});
}

template <class Fn>
void for_each_hypergraph(int n, int max_edges, std::set<int> sizes, std::uint64_t cap, Fn&& fn) {
  HypergraphEnumerator it(n, max_edges, std::move(sizes), cap);
  while (auto h = it.next()) fn(*h);
}

bool valid_matching(const Hypergraph& h, const Matching& m) {
  std::vector<int> hits(static_cast<std::size_t>(h.n()), 0);
  for (const Edge& e : m.edges) {
    if (!h.find_edge(e)) return false;
    for (Vertex v : e) ++hits[v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"obs1", "blocks", "edgebound", "sparsity-oracle",
                                              "matching-oracle"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "obs1") return run_obs1_suite(options);
  if (name == "blocks") return run_blocks_suite(options);
  if (name == "edgebound") return run_edgebound_suite(options);
  if (name == "sparsity-oracle") return run_sparsity_oracle_suite(options);
  if (name == "matching-oracle") return run_matching_oracle_suite(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteReport run_obs1_suite(const SuiteOptions& options) {
  Timer timer;
  SuiteReport report;
  report.suite = "obs1";
  const int max_n = pick(options.max_n, 6);
  const int max_edges = pick(options.max_edges, 5);
  for (int n = 1; n <= max_n; ++n) {
    for_each_hypergraph(n, max_edges, {2, 3, 4}, options.cap, [&](const Hypergraph& h) {
      if (!is_connected(two_section(h))) {
        ++report.skipped;
        return;
      }
      ++report.checked;
      if (!connected_bound_check(h)) add(report, "bound", "|V| exceeds 1 + sum(|e| - 1)", h);
    });
  }
  report.seconds = timer.seconds();
  return report;
}

SuiteReport run_blocks_suite(const SuiteOptions& options) {
  Timer timer;
  SuiteReport report;
  report.suite = "blocks";
  const int max_n = pick(options.max_n, 5);
  const int max_edges = pick(options.max_edges, 5);
  for (int n = 4; n <= max_n; ++n) {
    for_each_hypergraph(n, max_edges, {2, 3}, options.cap, [&](const Hypergraph& h) {
      const bool spanning_edge = std::any_of(h.edges().begin(), h.edges().end(),
                                             [n](const Edge& e) { return static_cast<int>(e.size()) == n; });
      if (spanning_edge || !density_hypothesis_check(h)) {
        ++report.skipped;
        return;
      }
      ++report.checked;
      try {
        const CutWitness cut = find_small_cut(h);
        if (!is_valid_cut(h, cut)) add(report, "invalid-cut", "returned witness does not separate", h);
      } catch (const CutConstructionFailure& e) {
        add(report, "construction", e.what(), h);
      }
      if (!oracle::has_small_cut(h)) add(report, "oracle", "no separating set of size <= 2 exists", h);
    });
  }
  report.seconds = timer.seconds();
  return report;
}

void check_edgebound_instances(std::span<const Hypergraph> instances, int s, SuiteReport& report) {
  for (const Hypergraph& h : instances) {
    EdgeBoundResult result;
    try {
      result = edge_bound_check(h, s);
    } catch (const HypothesisNotMet&) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    if (!result.holds) {
      std::string where;
      for (Vertex v : result.worst) where += (where.empty() ? "" : ",") + std::to_string(v);
      add(report, "bound",
          "subset {" + where + "} spans " + std::to_string(result.worst_count) + " > " +
              std::to_string(result.bound) + " edges",
          h);
    }
  }
}

SuiteReport run_edgebound_suite(const SuiteOptions& options) {
  Timer timer;
  SuiteReport report;
  report.suite = "edgebound";
  constexpr int s = 3;
  const int max_n = std::max(pick(options.max_n, 14), s + 1);
  const int max_edges = pick(options.max_edges, 5);
  const int samples = pick(options.samples, 200);

  for (int n = s + 1; n <= std::min(max_n, 6); ++n) {
    for_each_hypergraph(n, max_edges, {s}, options.cap, [&](const Hypergraph& h) {
      check_edgebound_instances(std::span(&h, 1), s, report);
    });
  }

  // Random part: keep drawing until `samples` instances pass the hypothesis.
  CounterRng rng(derive(options.seed, 0xED6E));
  std::uint64_t passing = 0;
  const std::uint64_t attempts = static_cast<std::uint64_t>(samples) * 50;
  for (std::uint64_t a = 0; a < attempts && passing < static_cast<std::uint64_t>(samples); ++a) {
    const int n = uniform_in(rng, s + 1, max_n);
    const int edges = uniform_in(rng, 1, std::max(1, n / 2));
    const Hypergraph h = random_uniform_hypergraph(n, s, edges, rng);
    const std::uint64_t before = report.checked;
    check_edgebound_instances(std::span(&h, 1), s, report);
    passing += report.checked - before;
  }
  report.seconds = timer.seconds();
  return report;
}

SuiteReport run_sparsity_oracle_suite(const SuiteOptions& options) {
  Timer timer;
  SuiteReport report;
  report.suite = "sparsity-oracle";
  constexpr int s = 3;
  constexpr int m = 16;
  const int max_n = std::max(pick(options.max_n, 14), s + 1);
  const int max_edges = pick(options.max_edges, 12);
  const int samples = pick(options.samples, 200);
  CounterRng rng(derive(options.seed, 0x5A45));
  for (int i = 0; i < samples; ++i) {
    const int n = uniform_in(rng, s + 1, max_n);
    const int limit = static_cast<int>(std::min<std::uint64_t>(binomial(n, s), max_edges));
    const Hypergraph h = random_uniform_hypergraph(n, s, uniform_in(rng, 1, limit), rng);
    ++report.checked;
    const SparsityVerdict fast = check_sparsity(h, m, s);
    const SparsityVerdict slow = brute_force_sparsity(h, m, s, options.cap);
    if (fast != slow) {
      add(report, "verdict", "search and enumeration disagree", h);
    } else if (fast.violator && !is_inclusion_minimal_violator(h, *fast.violator, s)) {
      add(report, "minimality", "reported violator is not inclusion-minimal", h);
    }
  }
  report.seconds = timer.seconds();
  return report;
}

SuiteReport run_matching_oracle_suite(const SuiteOptions& options) {
  Timer timer;
  SuiteReport report;
  report.suite = "matching-oracle";
  const int max_n = pick(options.max_n, 12);
  const int max_edges = pick(options.max_edges, 20);
  const int samples = pick(options.samples, 100);
  for (int s : {2, 3, 4}) {
    if (max_n < s) continue;
    CounterRng rng(derive(options.seed, {0x3A7C, static_cast<std::uint64_t>(s)}));
    for (int i = 0; i < samples; ++i) {
      // Mostly vertex counts divisible by s, where the answer can be yes.
      int n = uniform_in(rng, s, max_n);
      if (rng.below(5) != 0) n -= n % s;
      const int limit = static_cast<int>(std::min<std::uint64_t>(binomial(n, s), max_edges));
      const Hypergraph h = random_uniform_hypergraph(n, s, uniform_in(rng, 0, limit), rng);
      ++report.checked;
      const MatchingResult fast = find_perfect_matching(h);
      const bool expected = oracle::has_perfect_matching(h, options.cap);
      if (fast.outcome == SearchOutcome::budget_exhausted) {
        add(report, "budget", "search ran out of time", h);
      } else if ((fast.outcome == SearchOutcome::found) != expected) {
        add(report, "verdict", expected ? "missed a perfect matching" : "claimed a matching", h);
      } else if (fast.matching && !valid_matching(h, *fast.matching)) {
        add(report, "witness", "returned matching is not perfect", h);
      }
    }
  }
  report.seconds = timer.seconds();
  return report;
}

Hypergraph random_uniform_hypergraph(int n, int s, int edges, CounterRng& rng) {
  const std::uint64_t total = binomial(n, s);
  if (edges < 0 || static_cast<std::uint64_t>(edges) > total) {
    throw std::invalid_argument("more edges requested than s-subsets exist");
  }
  std::set<std::uint64_t> ranks;
  while (ranks.size() < static_cast<std::size_t>(edges)) ranks.insert(rng.below(total));
  std::vector<Edge> list;
  list.reserve(ranks.size());
  for (std::uint64_t rank : ranks) list.push_back(unrank_combination(n, s, rank));
  return Hypergraph(n, std::move(list));
}

OrderedJson to_json(const SuiteReport& report) {
  OrderedJson j;
  j["suite"] = report.suite;
  j["checked"] = report.checked;
  j["skipped"] = report.skipped;
  j["passed"] = report.passed();
  j["seconds"] = report.seconds;
  OrderedJson list = OrderedJson::array();
  for (const Counterexample& c : report.counterexamples) {
    list.push_back(OrderedJson{{"kind", c.kind}, {"detail", c.detail}, {"instance", to_json(c.instance)}});
  }
  j["counterexamples"] = std::move(list);
  return j;
}

}  // namespace critgraph

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "critgraph/hypergraph.hpp"
#include "critgraph/io.hpp"
#include "critgraph/rng.hpp"

namespace critgraph {

struct Counterexample {
  std::string kind;
  std::string detail;
  Hypergraph instance;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // hypothesis not met / outside the suite's scope
  std::vector<Counterexample> counterexamples;
  double seconds = 0.0;

  bool passed() const { return counterexamples.empty(); }
};

// Zero fields fall back to the per-suite defaults listed in suite_names().
struct SuiteOptions {
  int max_n = 0;
  int max_edges = 0;
  int samples = 0;
  Seed seed{20240601};
  std::uint64_t cap = 50'000'000;
};

// obs1, blocks, edgebound, sparsity-oracle, matching-oracle.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite and CapExceeded when an
// enumeration would exceed options.cap.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

SuiteReport run_obs1_suite(const SuiteOptions& options);
SuiteReport run_blocks_suite(const SuiteOptions& options);
SuiteReport run_edgebound_suite(const SuiteOptions& options);
SuiteReport run_sparsity_oracle_suite(const SuiteOptions& options);
SuiteReport run_matching_oracle_suite(const SuiteOptions& options);

// Lemma 4 style bound on given instances; instances whose sparsity
// hypothesis fails are counted as skipped, never as counterexamples.
void check_edgebound_instances(std::span<const Hypergraph> instances, int s, SuiteReport& report);

// `edges` distinct s-subsets of [0, n), uniformly at random.
Hypergraph random_uniform_hypergraph(int n, int s, int edges, CounterRng& rng);

OrderedJson to_json(const SuiteReport& report);

}  // namespace critgraph

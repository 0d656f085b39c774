#include "critgraph/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "critgraph/parallel.hpp"

namespace critgraph {

namespace {

struct Attempt {
  AttemptScore score;
  bool success = false;
  bool degree_rejected = false;
  std::optional<Certificate> certificate;  // kept only on success
};

AttemptScore score_of(const Certificate& c) {
  AttemptScore score{1 + stages_passed(c), 0};
  if (c.sparsity && !c.sparsity->holds) {
    score.detail = static_cast<int>(c.sparsity->violator->edges.size());
  } else if (!c.matchability.all_matchable) {
    score.detail = static_cast<int>(c.matchability.first_failure().value_or(0));
  } else if (c.min_subset_edges) {
    score.detail = c.min_subset_edges->count;
  }
  return score;
}

Attempt run_attempt(const Hypergraph& h, const ConstructionParams& params,
                    const ConstructConfig& config) {
  Attempt attempt;
  const auto degrees = h.degrees();
  const int min_degree = degrees.empty() ? 0 : *std::min_element(degrees.begin(), degrees.end());
  // Each vertex u needs an edge avoiding any chosen v in an edge with u.
  if (min_degree < 2) {
    attempt.degree_rejected = true;
    attempt.score = AttemptScore{0, min_degree};
    return attempt;
  }
  VerifyOptions options;
  options.matching = config.matching;
  options.stop_at_first_failure = true;
  Certificate c = verify_construction(h, params, options);
  attempt.score = score_of(c);
  attempt.success = c.conclusions.robust_to_r;
  if (attempt.success) attempt.certificate = std::move(c);
  return attempt;
}

Certificate full_verification(const Hypergraph& h, const ConstructionParams& params,
                              const ConstructConfig& config) {
  VerifyOptions options;
  options.matching = config.matching;
  options.workers = config.workers;
  return verify_construction(h, params, options);
}

}  // namespace

int feasibility_floor(const ConstructionParams& params) { return (params.s - 1) * params.m; }

ConstructOutcome run_construct(const ConstructConfig& config) {
  const ConstructionParams params = derive_params(config.r, config.k, config.C);
  ConstructOutcome outcome;

  if (config.instance) {
    outcome.attempts = 1;
    outcome.certificate = full_verification(*config.instance, params, config);
    outcome.certificate.seed = config.seed;
    outcome.success = outcome.certificate.conclusions.robust_to_r;
    outcome.best_score = score_of(outcome.certificate);
    return outcome;
  }
  if (config.restarts < 1) throw std::invalid_argument("restart budget must be positive");

  const auto sample = [&](std::uint64_t index) {
    return sample_hypergraph(params.n, params.s, params.q, derive(config.seed, index));
  };
  const std::size_t batch = static_cast<std::size_t>(std::max(config.workers, 1));
  std::uint64_t best_index = 0;
  bool have_best = false;

  for (std::uint64_t start = 0; start < config.restarts; start += batch) {
    const std::size_t count =
        static_cast<std::size_t>(std::min<std::uint64_t>(batch, config.restarts - start));
    std::vector<Attempt> attempts(count);
    parallel_for(count, config.workers,
                 [&](std::size_t i) { attempts[i] = run_attempt(sample(start + i), params, config); });
    for (std::size_t i = 0; i < count; ++i) {
      ++outcome.attempts;
      outcome.degree_rejections += attempts[i].degree_rejected;
      if (attempts[i].success) {
        outcome.success = true;
        outcome.best_score = attempts[i].score;
        outcome.certificate = std::move(*attempts[i].certificate);
        outcome.certificate.seed = config.seed;
        outcome.certificate.restart = start + i;
        return outcome;
      }
      if (!have_best || outcome.best_score < attempts[i].score) {
        have_best = true;
        outcome.best_score = attempts[i].score;
        best_index = start + i;
      }
    }
  }

  outcome.certificate = full_verification(sample(best_index), params, config);
  outcome.certificate.seed = config.seed;
  outcome.certificate.restart = best_index;
  return outcome;
}

}  // namespace critgraph

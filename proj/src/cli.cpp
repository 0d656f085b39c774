#include "critgraph/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <random>

#include "critgraph/errors.hpp"
#include "critgraph/io.hpp"
#include "critgraph/pipeline.hpp"
#include "critgraph/suites.hpp"

namespace critgraph {

namespace {

std::uint64_t fresh_seed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

const char* status_word(bool ok) { return ok ? "yes" : "no"; }

struct ConstructFlags {
  int r = 0;
  int k = 0;
  std::optional<double> C;
  std::optional<std::uint64_t> seed;
  std::uint64_t restarts = 1000;
  int workers = 1;
  long budget_ms = 10'000;
  std::string out = "certificate.json";
  std::string dot;
  std::string instance;
};

int cmd_construct(const ConstructFlags& f, std::ostream& out, std::ostream& err) {
  ConstructConfig config;
  config.r = f.r;
  config.k = f.k;
  config.C = f.C;
  config.seed = Seed{f.seed.value_or(fresh_seed())};
  config.restarts = f.restarts;
  config.workers = f.workers;
  config.matching.budget = std::chrono::milliseconds(f.budget_ms);
  if (!f.instance.empty()) {
    config.instance = hypergraph_from_json(nlohmann::json::parse(read_file(f.instance)));
  } else if (f.restarts == 0) {
    err << "error: --restarts must be positive unless --instance is given\n";
    return kExitUsage;
  }

  const ConstructionParams params = derive_params(config.r, config.k, config.C);
  err << "seed " << config.seed.value << "\n"
      << "params r=" << params.r << " s=" << params.s << " m=" << params.m << " k=" << params.k
      << " n=" << params.n << " l=" << params.l << std::setprecision(6) << " p=" << params.p
      << " q=" << params.q << "\n";
  if (params.n < feasibility_floor(params)) {
    err << "note: n=" << params.n << " is below " << feasibility_floor(params)
        << ", the smallest n at which matchability and sparsity can hold together\n";
  }

  const ConstructOutcome outcome = run_construct(config);
  write_file(f.out, serialize_certificate(outcome.certificate));
  if (!f.dot.empty()) write_file(f.dot, to_dot(outcome.certificate.graph));

  const Certificate& c = outcome.certificate;
  err << "attempts " << outcome.attempts << " (degree rejections " << outcome.degree_rejections
      << ")\n";
  err << (outcome.success ? "certificate" : "best attempt") << " restart " << c.restart
      << ": sparsity " << (c.sparsity ? status_word(c.sparsity->holds) : "not run")
      << ", all matchable " << status_word(c.matchability.all_matchable) << ", min subset edges "
      << (c.min_subset_edges ? std::to_string(c.min_subset_edges->count) : "not run") << "\n";
  out << (outcome.success ? "robust certificate written to " : "no robust instance; best attempt written to ")
      << f.out << "\n";
  return outcome.success ? kExitOk : kExitSearchFailed;
}

int cmd_verify(const std::string& path, int workers, std::ostream& out) {
  const Certificate c = parse_certificate(read_file(path));
  const CertificateCheck check = check_certificate(c, workers);
  if (!check.ok) {
    out << "certificate rejected:\n";
    for (const std::string& reason : check.reasons) out << "  - " << reason << "\n";
    return kExitSearchFailed;
  }
  out << "certificate ok: chi " << (c.conclusions.chi ? std::to_string(*c.conclusions.chi) : "uncertified")
      << ", vertex_critical " << status_word(c.conclusions.vertex_critical) << ", robust_to_r "
      << status_word(c.conclusions.robust_to_r) << "\n";
  return kExitOk;
}

int cmd_lemma_check(const std::string& suite, const SuiteOptions& options, const std::string& path,
                    std::ostream& out) {
  const SuiteReport report = run_suite(suite, options);
  out << std::left << std::setw(18) << "suite" << std::setw(10) << "checked" << std::setw(10)
      << "skipped" << std::setw(17) << "counterexamples" << "result\n";
  out << std::setw(18) << report.suite << std::setw(10) << report.checked << std::setw(10)
      << report.skipped << std::setw(17) << report.counterexamples.size()
      << (report.passed() ? "PASS" : "FAIL") << "\n";
  const std::string json = dump_document(to_json(report));
  if (!path.empty()) {
    write_file(path, json);
  } else if (!report.passed()) {
    out << json;
  }
  return report.passed() ? kExitOk : kExitSearchFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified construction of vertex-critical graphs robust to edge deletion", "critgraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  ConstructFlags cf;
  auto* construct = app.add_subcommand("construct", "sample and verify a construction instance");
  construct->add_option("--r", cf.r, "edge-deletion budget")->required()->check(CLI::Range(1, 27));
  construct->add_option("--k", cf.k, "target chromatic number")->required()->check(CLI::Range(2, 1 << 20));
  construct->add_option("--C", cf.C, "threshold constant (default 2(s-1)!)")->check(CLI::PositiveNumber);
  construct->add_option("--seed", cf.seed, "master seed (random if omitted)");
  construct->add_option("--restarts", cf.restarts, "restart budget")->capture_default_str();
  construct->add_option("--workers", cf.workers, "worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
  construct->add_option("--budget-ms", cf.budget_ms, "time budget per matching search")
      ->check(CLI::Range(1L, 86'400'000L))
      ->capture_default_str();
  construct->add_option("--out", cf.out, "certificate path")->capture_default_str();
  construct->add_option("--dot", cf.dot, "also write G as DOT");
  construct->add_option("--instance", cf.instance, "verify this hypergraph JSON instead of sampling")
      ->check(CLI::ExistingFile);

  std::string verify_path;
  int verify_workers = 1;
  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("path", verify_path, "certificate JSON")->required();
  verify->add_option("--workers", verify_workers)->check(CLI::Range(1, 1024));

  std::string suite;
  std::string suite_out;
  SuiteOptions suite_options;
  std::uint64_t suite_seed = suite_options.seed.value;
  auto* lemma = app.add_subcommand("lemma-check", "run an exhaustive or randomized check suite");
  lemma->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  lemma->add_option("--max-n", suite_options.max_n)->check(CLI::Range(1, 20));
  lemma->add_option("--max-edges", suite_options.max_edges)->check(CLI::Range(1, 64));
  lemma->add_option("--samples", suite_options.samples)->check(CLI::Range(1, 1'000'000));
  lemma->add_option("--cap", suite_options.cap, "enumeration cap")->capture_default_str();
  lemma->add_option("--seed", suite_seed)->capture_default_str();
  lemma->add_option("--out", suite_out, "JSON report path");

  int sweep_s = 0;
  std::vector<int> sweep_n;
  std::vector<double> sweep_p;
  int sweep_samples = 0;
  std::optional<std::uint64_t> sweep_seed;
  std::string sweep_out;
  SweepOptions sweep_options;
  long sweep_budget_ms = 10'000;
  auto* sweep = app.add_subcommand("sweep", "estimate the perfect-matching probability");
  sweep->add_option("--s", sweep_s, "uniformity")->required()->check(CLI::Range(2, 30));
  sweep->add_option("--n", sweep_n, "vertex counts")->required()->delimiter(',')->check(CLI::PositiveNumber);
  sweep->add_option("--p", sweep_p, "edge probabilities")->required()->delimiter(',')->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--samples", sweep_samples)->required()->check(CLI::Range(1, 100'000'000));
  sweep->add_option("--seed", sweep_seed, "master seed (random if omitted)");
  sweep->add_option("--workers", sweep_options.workers)->check(CLI::Range(1, 1024));
  sweep->add_option("--budget-ms", sweep_budget_ms)->check(CLI::Range(1L, 86'400'000L));
  sweep->add_option("--out", sweep_out, "CSV path (stdout if omitted)");

  std::string dot_cert;
  std::string dot_out;
  auto* export_dot = app.add_subcommand("export-dot", "write the graph of a certificate as DOT");
  export_dot->add_option("certificate", dot_cert)->required()->check(CLI::ExistingFile);
  export_dot->add_option("--out", dot_out)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(cf, out, err);
    if (*verify) return cmd_verify(verify_path, verify_workers, out);
    if (*lemma) {
      suite_options.seed = Seed{suite_seed};
      return cmd_lemma_check(suite, suite_options, suite_out, out);
    }
    if (*sweep) {
      for (int n : sweep_n) {
        if (n % sweep_s != 0) {
          err << "error: n=" << n << " is not a multiple of s=" << sweep_s << "\n";
          return kExitUsage;
        }
      }
      const Seed seed{sweep_seed.value_or(fresh_seed())};
      err << "seed " << seed.value << "\n";
      sweep_options.matching.budget = std::chrono::milliseconds(sweep_budget_ms);
      const auto rows = pm_threshold_sweep(sweep_s, sweep_n, sweep_p, sweep_samples, seed, sweep_options);
      const std::string csv = sweep_csv(rows);
      if (sweep_out.empty()) {
        out << csv;
      } else {
        write_file(sweep_out, csv);
      }
      return kExitOk;
    }
    if (*export_dot) {
      write_file(dot_out, to_dot(parse_certificate(read_file(dot_cert)).graph));
      return kExitOk;
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace critgraph

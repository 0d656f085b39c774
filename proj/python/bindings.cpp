#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "critgraph/exact.hpp"
#include "critgraph/io.hpp"
#include "critgraph/lemmas.hpp"
#include "critgraph/pipeline.hpp"
#include "critgraph/suites.hpp"
#include "critgraph/errors.hpp"

namespace py = pybind11;
using namespace critgraph;

namespace {

py::object json_to_python(const OrderedJson& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict params_dict(const ConstructionParams& p) {
  py::dict d;
  d["r"] = p.r;
  d["s"] = p.s;
  d["m"] = p.m;
  d["k"] = p.k;
  d["n"] = p.n;
  d["C"] = p.C;
  d["l"] = p.l;
  d["p"] = p.p;
  d["q"] = p.q;
  return d;
}

py::object verdict_dict(const SparsityVerdict& v) {
  py::dict d;
  d["holds"] = v.holds;
  d["m"] = v.m;
  d["s"] = v.s;
  if (v.violator) {
    d["violator"] = v.violator->edges;
    d["span"] = v.violator->span;
  } else {
    d["violator"] = py::none();
    d["span"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified vertex-critical graph construction";
  m.attr("__version__") = std::string(kToolVersion);

  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<HypothesisNotMet>(m, "HypothesisNotMet");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Hypergraph::n)
      .def_property_readonly("edges", &Hypergraph::edges)
      .def("uniformity", &Hypergraph::uniformity)
      .def("degrees", &Hypergraph::degrees)
      .def("__len__", &Hypergraph::edge_count)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) {
        return "Hypergraph(n=" + std::to_string(h.n()) + ", edges=" + std::to_string(h.edge_count()) + ")";
      });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<GraphEdge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors)
      .def("adjacent", &Graph::adjacent)
      .def("edge_count", &Graph::edge_count)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("to_dot", [](const Graph& g) { return to_dot(g); });

  m.def("two_section", &two_section);
  m.def("complement", &complement);
  m.def("components", &components);

  m.def("derive_params", [](int r, int k, std::optional<double> C) { return params_dict(derive_params(r, k, C)); },
        py::arg("r"), py::arg("k"), py::arg("C") = py::none());
  m.def("shamir_p", &shamir_p, py::arg("n"), py::arg("s"), py::arg("C"));
  m.def("sample_hypergraph",
        [](int n, int s, double p, std::uint64_t seed) { return sample_hypergraph(n, s, p, Seed{seed}); },
        py::arg("n"), py::arg("s"), py::arg("p"), py::arg("seed"));
  m.def("pm_threshold_sweep",
        [](int s, const std::vector<int>& n_list, const std::vector<double>& p_grid, int samples,
           std::uint64_t seed, int workers) {
          SweepOptions options;
          options.workers = workers;
          py::list rows;
          for (const SweepPoint& row : pm_threshold_sweep(s, n_list, p_grid, samples, Seed{seed}, options)) {
            py::dict d;
            d["n"] = row.n;
            d["p"] = row.p;
            d["samples"] = row.samples;
            d["successes"] = row.successes;
            d["fraction"] = row.fraction;
            rows.append(d);
          }
          return rows;
        },
        py::arg("s"), py::arg("n_list"), py::arg("p_grid"), py::arg("samples"), py::arg("seed"),
        py::arg("workers") = 1);

  m.def("find_perfect_matching",
        [](const Hypergraph& h, double budget_seconds) -> py::object {
          MatchingOptions options;
          options.budget = std::chrono::milliseconds(static_cast<long>(budget_seconds * 1000));
          const MatchingResult r = find_perfect_matching(h, options);
          if (r.outcome == SearchOutcome::budget_exhausted) throw std::runtime_error("matching budget exhausted");
          if (!r.matching) return py::none();
          return py::cast(r.matching->edges);
        },
        py::arg("h"), py::arg("budget_seconds") = 10.0);
  m.def("all_deletions_matchable", [](const Hypergraph& h, int s) { return all_deletions_matchable(h, s).all_matchable; },
        py::arg("h"), py::arg("s"));

  m.def("check_sparsity", [](const Hypergraph& h, int m_, int s) { return verdict_dict(check_sparsity(h, m_, s)); },
        py::arg("h"), py::arg("m"), py::arg("s"));
  m.def("brute_force_sparsity",
        [](const Hypergraph& h, int m_, int s) { return verdict_dict(brute_force_sparsity(h, m_, s)); },
        py::arg("h"), py::arg("m"), py::arg("s"));

  m.def("exact_independence", &exact_independence, py::arg("g"), py::arg("cap") = 60);
  m.def("exact_chromatic", &exact_chromatic, py::arg("g"), py::arg("cap") = 45);
  m.def("min_subset_edges",
        [](const Graph& g, int t) {
          const SubsetEdgeCount r = min_subset_edges(g, t);
          return py::make_tuple(r.count, r.witness);
        },
        py::arg("g"), py::arg("t"));

  m.def("verify_construction",
        [](const Hypergraph& h, int r, int k, std::optional<double> C) {
          return serialize_certificate(verify_construction(h, derive_params(r, k, C)));
        },
        py::arg("h"), py::arg("r"), py::arg("k"), py::arg("C") = py::none(),
        "Full verification; returns the certificate as JSON text.");
  m.def("check_certificate",
        [](const std::string& text) {
          const CertificateCheck c = check_certificate(parse_certificate(text));
          return py::make_tuple(c.ok, c.reasons);
        },
        py::arg("certificate_json"));
  m.def("construct",
        [](int r, int k, std::uint64_t seed, std::uint64_t restarts, int workers, std::optional<double> C) {
          ConstructConfig config;
          config.r = r;
          config.k = k;
          config.C = C;
          config.seed = Seed{seed};
          config.restarts = restarts;
          config.workers = workers;
          ConstructOutcome outcome;
          {
            py::gil_scoped_release release;
            outcome = run_construct(config);
          }
          return py::make_tuple(outcome.success, serialize_certificate(outcome.certificate));
        },
        py::arg("r"), py::arg("k"), py::arg("seed"), py::arg("restarts") = 1000, py::arg("workers") = 1,
        py::arg("C") = py::none(), "Returns (success, certificate JSON text).");

  m.def("find_small_cut",
        [](const Hypergraph& h) {
          const CutWitness c = find_small_cut(h);
          return py::make_tuple(c.w, c.side_a, c.side_b);
        },
        py::arg("h"));
  m.def("edge_bound_check",
        [](const Hypergraph& h, int s) {
          const EdgeBoundResult r = edge_bound_check(h, s);
          return py::make_tuple(r.holds, r.worst, r.worst_count);
        },
        py::arg("h"), py::arg("s"));
  m.def("run_suite",
        [](const std::string& name, int max_n, int max_edges, int samples, std::uint64_t seed,
           std::uint64_t cap) {
          SuiteOptions options;
          options.max_n = max_n;
          options.max_edges = max_edges;
          options.samples = samples;
          options.seed = Seed{seed};
          options.cap = cap;
          return json_to_python(to_json(run_suite(name, options)));
        },
        py::arg("name"), py::arg("max_n") = 0, py::arg("max_edges") = 0, py::arg("samples") = 0,
        py::arg("seed") = 20240601, py::arg("cap") = SuiteOptions{}.cap);
}

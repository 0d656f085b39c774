#include "doctest.h"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>

#include <filesystem>
#include <sstream>

#include "critgraph/cli.hpp"
#include "critgraph/io.hpp"
#include "critgraph/pipeline.hpp"
#include "support.hpp"

using namespace critgraph;
using namespace testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "critgraph");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "critgraph-unit";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t graphviz_edge_count(const std::string& dot) {
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                  boost::property<boost::vertex_name_t, std::string>>;
  G g;
  boost::dynamic_properties dp(boost::ignore_other_properties);
  dp.property("node_id", boost::get(boost::vertex_name, g));
  std::istringstream in(dot);
  REQUIRE(boost::read_graphviz(in, g, dp));
  return boost::num_edges(g);
}

}  // namespace

TEST_CASE("DOT export") {
  const Graph tri = complete_graph(3);
  CHECK(to_dot(tri) == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
  CHECK(to_dot(Graph(2)) == "graph G {\n  0;\n  1;\n}\n");
  const Graph petersen = petersen_graph();
  CHECK(graphviz_edge_count(to_dot(petersen)) == 15);
  CHECK(graphviz_edge_count(to_dot(Graph(4))) == 0);
}

TEST_CASE("sweep CSV") {
  const std::vector<SweepPoint> rows{{6, 0.0, 10, 0, 0.0}, {6, 0.25, 10, 7, 0.7}};
  CHECK(sweep_csv(rows) == "n,p,samples,successes,fraction\n6,0,10,0,0\n6,0.25,10,7,0.7\n");
}

TEST_CASE("certificate JSON round trip") {
  const auto params = derive_params(1, 3);
  ConstructConfig config;
  config.r = 1;
  config.k = 3;
  config.seed = Seed{17};
  config.restarts = 5;
  const ConstructOutcome outcome = run_construct(config);
  const std::string text = serialize_certificate(outcome.certificate);
  const Certificate back = parse_certificate(text);
  CHECK(serialize_certificate(back) == text);
  CHECK(back.params == params);
  CHECK(check_certificate(back).ok);
  CHECK(text.find("\"schema\": \"critgraph.certificate/1\"") != std::string::npos);

  CHECK_THROWS_AS(parse_certificate(text.substr(0, text.size() / 2)), ParseError);
  CHECK_THROWS_AS(parse_certificate("{\"schema\": \"other\"}"), ParseError);
  CHECK_THROWS_AS(parse_certificate("[1, 2]"), ParseError);
}

TEST_CASE("run_construct is deterministic and worker independent") {
  ConstructConfig config;
  config.r = 1;
  config.k = 4;
  config.seed = Seed{5};
  config.restarts = 12;
  const ConstructOutcome one = run_construct(config);
  config.workers = 3;
  const ConstructOutcome three = run_construct(config);
  CHECK(serialize_certificate(one.certificate) == serialize_certificate(three.certificate));
  CHECK(one.attempts == 12);
  CHECK_FALSE(one.success);
  CHECK(check_certificate(one.certificate).ok);
  CHECK(feasibility_floor(derive_params(1, 4)) == 96);

  config.restarts = 0;
  CHECK_THROWS_AS(run_construct(config), std::invalid_argument);
  config.instance = complete_uniform(13, 4);
  const ConstructOutcome given = run_construct(config);
  CHECK(given.attempts == 1);
  CHECK(given.certificate.hypergraph == *config.instance);
}

TEST_CASE("cli construct and verify") {
  const std::string out = scratch("k2.json").string();
  Run a = cli({"construct", "--r", "1", "--k", "2", "--seed", "9", "--restarts", "3", "--out", out});
  CHECK(a.code == kExitSearchFailed);
  CHECK(a.err.find("seed 9") != std::string::npos);
  Run v = cli({"verify", out});
  CHECK(v.code == kExitOk);

  // same flags, same bytes
  const std::string again = scratch("k2b.json").string();
  cli({"construct", "--r", "1", "--k", "2", "--seed", "9", "--restarts", "3", "--out", again});
  CHECK(read_file(out) == read_file(again));

  CHECK(cli({"construct", "--r", "0", "--k", "3"}).code == kExitUsage);
  CHECK(cli({"construct", "--r", "1", "--k", "1"}).code == kExitUsage);
  CHECK(cli({"construct", "--r", "1", "--k", "3", "--restarts", "0"}).code == kExitUsage);
  CHECK(cli({"construct", "--r", "1", "--k", "3", "--out", "/nonexistent/dir/c.json", "--restarts", "1"}).code ==
        kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);

  // random seed is recorded
  Run r = cli({"construct", "--r", "1", "--k", "2", "--restarts", "1", "--out", out});
  CHECK(r.err.find("seed ") != std::string::npos);
  const Certificate c = parse_certificate(read_file(out));
  CHECK(r.err.find("seed " + std::to_string(c.seed.value)) != std::string::npos);
}

TEST_CASE("cli verify failures") {
  const std::string good = scratch("good.json").string();
  cli({"construct", "--r", "1", "--k", "3", "--seed", "2", "--restarts", "2", "--out", good});
  const std::string text = read_file(good);

  const std::string truncated = scratch("truncated.json").string();
  write_file(truncated, text.substr(0, text.size() / 3));
  Run t = cli({"verify", truncated});
  CHECK(t.code == kExitUsage);
  CHECK(t.err.find("parse error") != std::string::npos);

  Certificate c = parse_certificate(text);
  auto& entry = c.matchability.per_vertex[0];
  REQUIRE(entry.matching);
  entry.matching->edges[0] = entry.matching->edges[1];
  const std::string tampered = scratch("tampered.json").string();
  write_file(tampered, serialize_certificate(c));
  Run v = cli({"verify", tampered});
  CHECK(v.code != kExitOk);
  CHECK(v.out.find("matching not disjoint/covering") != std::string::npos);

  CHECK(cli({"verify", scratch("missing.json").string()}).code == kExitUsage);
}

TEST_CASE("cli instance mode and DOT") {
  const std::string inst = scratch("instance.json").string();
  write_file(inst, dump_document(to_json(complete_uniform(9, 4))));
  const std::string cert = scratch("instance-cert.json").string();
  const std::string dot = scratch("instance.dot").string();
  Run a = cli({"construct", "--r", "1", "--k", "3", "--restarts", "0", "--instance", inst, "--out", cert,
               "--dot", dot, "--seed", "1"});
  CHECK(a.code == kExitSearchFailed);
  CHECK(cli({"verify", cert}).code == kExitOk);
  CHECK(read_file(dot) == to_dot(Graph(9)));

  const std::string dot2 = scratch("export.dot").string();
  CHECK(cli({"export-dot", cert, "--out", dot2}).code == kExitOk);
  CHECK(read_file(dot2) == read_file(dot));

  // wrong dimensions for the parameters
  write_file(inst, dump_document(to_json(complete_uniform(8, 4))));
  CHECK(cli({"construct", "--r", "1", "--k", "3", "--restarts", "0", "--instance", inst, "--out", cert}).code ==
        kExitUsage);
}

TEST_CASE("cli sweep") {
  Run a = cli({"sweep", "--s", "3", "--n", "6,9", "--p", "0,1", "--samples", "5", "--seed", "4"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "n,p,samples,successes,fraction\n6,0,5,0,0\n6,1,5,5,1\n9,0,5,0,0\n9,1,5,5,1\n");
  Run b = cli({"sweep", "--s", "3", "--n", "18", "--p", "0.01,0.02", "--samples", "30", "--seed", "4"});
  Run c = cli({"sweep", "--s", "3", "--n", "18", "--p", "0.01,0.02", "--samples", "30", "--seed", "4"});
  CHECK(b.out == c.out);
  CHECK(cli({"sweep", "--s", "3", "--n", "7", "--p", "0.5", "--samples", "5"}).code == kExitUsage);
  CHECK(cli({"sweep", "--s", "3", "--n", "6", "--p", "1.5", "--samples", "5"}).code == kExitUsage);
}

TEST_CASE("cli lemma-check") {
  Run a = cli({"lemma-check", "--suite", "blocks"});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("PASS") != std::string::npos);
  CHECK(cli({"lemma-check", "--suite", "sparsity-oracle", "--samples", "50"}).code == kExitOk);
  CHECK(cli({"lemma-check", "--suite", "matching-oracle", "--samples", "30"}).code == kExitOk);
  CHECK(cli({"lemma-check", "--suite", "nope"}).code == kExitUsage);
  CHECK(cli({"lemma-check", "--suite", "obs1", "--max-n", "9", "--max-edges", "9", "--cap", "1000"}).code ==
        kExitCapExceeded);

  const std::string report = scratch("report.json").string();
  CHECK(cli({"lemma-check", "--suite", "edgebound", "--max-n", "8", "--samples", "20", "--out", report}).code ==
        kExitOk);
  CHECK(read_file(report).find("\"suite\": \"edgebound\"") != std::string::npos);
}

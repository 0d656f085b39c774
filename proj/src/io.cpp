#include "critgraph/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace critgraph {

namespace {

using nlohmann::json;

const char* status_name(VertexStatus s) {
  switch (s) {
    case VertexStatus::matched: return "matched";
    case VertexStatus::no_matching: return "no_matching";
    case VertexStatus::budget_exhausted: return "budget_exhausted";
    case VertexStatus::not_run: return "not_run";
  }
  return "not_run";
}

VertexStatus status_from(const std::string& name) {
  if (name == "matched") return VertexStatus::matched;
  if (name == "no_matching") return VertexStatus::no_matching;
  if (name == "budget_exhausted") return VertexStatus::budget_exhausted;
  if (name == "not_run") return VertexStatus::not_run;
  throw ParseError("unknown matchability status '" + name + "'");
}

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

template <class T>
T get(const json& j, const char* name, const std::string& where) {
  const json& value = field(j, name, where);
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(where + "." + name + ": " + e.what());
  }
}

std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

bool is_scalar_array(const OrderedJson& j) {
  if (!j.is_array()) return false;
  for (const auto& item : j) {
    if (item.is_structured()) return false;
  }
  return true;
}

void emit(const OrderedJson& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + OrderedJson(key).dump() + ": ";
      emit(value, indent + 2, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_scalar_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      emit(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump();
  }
}

Matching matching_from_json(const json& j, const std::string& where) {
  try {
    Matching m{j.get<std::vector<Edge>>(), {}};
    // Not validated here: check_certificate reports overlapping witnesses.
    for (const Edge& e : m.edges) m.covered.insert(m.covered.end(), e.begin(), e.end());
    std::sort(m.covered.begin(), m.covered.end());
    return m;
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

OrderedJson to_json(const Hypergraph& h) {
  OrderedJson j;
  j["n"] = h.n();
  j["edges"] = h.edges();
  return j;
}

OrderedJson to_json(const Certificate& c) {
  OrderedJson j;
  j["schema"] = kCertificateSchema;
  j["tool_version"] = c.tool_version;
  j["seed"] = c.seed.value;
  j["restart"] = c.restart;

  const ConstructionParams& p = c.params;
  j["params"] = OrderedJson{{"r", p.r}, {"s", p.s}, {"m", p.m}, {"k", p.k}, {"n", p.n},
                            {"C", p.C}, {"l", p.l}, {"p", p.p}, {"q", p.q}};
  j["hypergraph"] = to_json(c.hypergraph);

  OrderedJson graph;
  graph["n"] = c.graph.n();
  graph["edge_count"] = c.graph.edge_count();
  OrderedJson edges = OrderedJson::array();
  for (auto [u, v] : c.graph.edges()) edges.push_back({u, v});
  graph["edges"] = std::move(edges);
  j["graph"] = std::move(graph);

  OrderedJson vertices = OrderedJson::array();
  for (const VertexMatchability& v : c.matchability.per_vertex) {
    OrderedJson entry;
    entry["vertex"] = v.vertex;
    entry["status"] = status_name(v.status);
    entry["matching"] = v.matching ? OrderedJson(v.matching->edges) : OrderedJson(nullptr);
    const auto& coloring = c.colorings.at(static_cast<std::size_t>(v.vertex));
    entry["coloring"] = coloring ? OrderedJson(*coloring) : OrderedJson(nullptr);
    vertices.push_back(std::move(entry));
  }
  j["matchability"] =
      OrderedJson{{"all_matchable", c.matchability.all_matchable}, {"vertices", std::move(vertices)}};

  if (c.sparsity) {
    OrderedJson sparsity;
    sparsity["m"] = c.sparsity->m;
    sparsity["s"] = c.sparsity->s;
    sparsity["holds"] = c.sparsity->holds;
    if (c.sparsity->violator) {
      sparsity["violator"] = OrderedJson{{"edges", c.sparsity->violator->edges},
                                         {"span", c.sparsity->violator->span}};
    } else {
      sparsity["violator"] = nullptr;
    }
    j["sparsity"] = std::move(sparsity);
  } else {
    j["sparsity"] = nullptr;
  }

  if (c.min_subset_edges) {
    j["min_subset_edges"] = OrderedJson{{"t", p.s + 1},
                                        {"count", c.min_subset_edges->count},
                                        {"witness", c.min_subset_edges->witness},
                                        {"exhaustive", c.min_subset_edges->exhaustive}};
  } else {
    j["min_subset_edges"] = nullptr;
  }

  j["conclusions"] =
      OrderedJson{{"chi", c.conclusions.chi ? OrderedJson(*c.conclusions.chi) : OrderedJson(nullptr)},
                  {"vertex_critical", c.conclusions.vertex_critical},
                  {"robust_to_r", c.conclusions.robust_to_r}};
  return j;
}

Hypergraph hypergraph_from_json(const json& j) {
  const int n = get<int>(j, "n", "hypergraph");
  auto edges = get<std::vector<Edge>>(j, "edges", "hypergraph");
  try {
    return Hypergraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("hypergraph: ") + e.what());
  }
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  const auto schema = get<std::string>(j, "schema", "certificate");
  if (schema != kCertificateSchema) throw ParseError("unsupported schema '" + schema + "'");
  c.tool_version = get<std::string>(j, "tool_version", "certificate");
  c.seed = Seed{get<std::uint64_t>(j, "seed", "certificate")};
  c.restart = get<std::uint64_t>(j, "restart", "certificate");

  const json& p = field(j, "params", "certificate");
  c.params.r = get<int>(p, "r", "params");
  c.params.s = get<int>(p, "s", "params");
  c.params.m = get<int>(p, "m", "params");
  c.params.k = get<int>(p, "k", "params");
  c.params.n = get<int>(p, "n", "params");
  c.params.C = get<double>(p, "C", "params");
  c.params.l = get<int>(p, "l", "params");
  c.params.p = get<double>(p, "p", "params");
  c.params.q = get<double>(p, "q", "params");

  c.hypergraph = hypergraph_from_json(field(j, "hypergraph", "certificate"));

  const json& g = field(j, "graph", "certificate");
  const int graph_n = get<int>(g, "n", "graph");
  const auto pairs = get<std::vector<std::pair<int, int>>>(g, "edges", "graph");
  try {
    c.graph = Graph(graph_n, pairs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
  if (get<std::size_t>(g, "edge_count", "graph") != c.graph.edge_count()) {
    throw ParseError("graph: edge_count disagrees with edge list");
  }

  const json& m = field(j, "matchability", "certificate");
  c.matchability.all_matchable = get<bool>(m, "all_matchable", "matchability");
  const json& vertices = field(m, "vertices", "matchability");
  if (!vertices.is_array()) throw ParseError("matchability.vertices: expected an array");
  for (const json& entry : vertices) {
    VertexMatchability v;
    v.vertex = get<int>(entry, "vertex", "matchability.vertices[]");
    v.status = status_from(get<std::string>(entry, "status", "matchability.vertices[]"));
    const std::string where = "matchability.vertices[" + std::to_string(v.vertex) + "]";
    const json& matching = field(entry, "matching", where);
    if (!matching.is_null()) v.matching = matching_from_json(matching, where + ".matching");
    const json& coloring = field(entry, "coloring", where);
    if (coloring.is_null()) {
      c.colorings.emplace_back();
    } else {
      c.colorings.emplace_back(get<Coloring>(entry, "coloring", where));
    }
    c.matchability.per_vertex.push_back(std::move(v));
  }

  const json& sparsity = field(j, "sparsity", "certificate");
  if (!sparsity.is_null()) {
    SparsityVerdict verdict;
    verdict.m = get<int>(sparsity, "m", "sparsity");
    verdict.s = get<int>(sparsity, "s", "sparsity");
    verdict.holds = get<bool>(sparsity, "holds", "sparsity");
    const json& violator = field(sparsity, "violator", "sparsity");
    if (!violator.is_null()) {
      verdict.violator = SparsityViolator{
          get<std::vector<std::size_t>>(violator, "edges", "sparsity.violator"),
          get<int>(violator, "span", "sparsity.violator")};
    }
    c.sparsity = verdict;
  }

  const json& subset = field(j, "min_subset_edges", "certificate");
  if (!subset.is_null()) {
    c.min_subset_edges = SubsetEdgeCount{get<int>(subset, "count", "min_subset_edges"),
                                         get<VertexSet>(subset, "witness", "min_subset_edges"),
                                         get<bool>(subset, "exhaustive", "min_subset_edges")};
  }

  const json& conclusions = field(j, "conclusions", "certificate");
  const json& chi = field(conclusions, "chi", "conclusions");
  if (!chi.is_null()) c.conclusions.chi = get<int>(conclusions, "chi", "conclusions");
  c.conclusions.vertex_critical = get<bool>(conclusions, "vertex_critical", "conclusions");
  c.conclusions.robust_to_r = get<bool>(conclusions, "robust_to_r", "conclusions");
  return c;
}

std::string dump_document(const OrderedJson& j) {
  std::string out;
  emit(j, 0, out);
  out += '\n';
  return out;
}

std::string serialize_certificate(const Certificate& c) { return dump_document(to_json(c)); }

Certificate parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

std::string sweep_csv(std::span<const SweepPoint> rows) {
  std::string out = "n,p,samples,successes,fraction\n";
  for (const SweepPoint& row : rows) {
    out += std::to_string(row.n) + ',' + format_real(row.p) + ',' + std::to_string(row.samples) +
           ',' + std::to_string(row.successes) + ',' + format_real(row.fraction) + '\n';
  }
  return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (Vertex v = 0; v < g.n(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace critgraph

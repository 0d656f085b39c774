#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "critgraph/hypergraph.hpp"
#include "critgraph/sampler.hpp"
#include "critgraph/verifier.hpp"

namespace critgraph {

inline constexpr const char* kCertificateSchema = "critgraph.certificate/1";

// Malformed input document; the message carries the diagnostic.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const Hypergraph& h);
OrderedJson to_json(const Certificate& c);

// Accepts {"n": N, "edges": [[...], ...]}. Throws ParseError.
Hypergraph hypergraph_from_json(const nlohmann::json& j);
Certificate certificate_from_json(const nlohmann::json& j);

// Fixed field order, arrays of scalars on one line, trailing newline.
std::string dump_document(const OrderedJson& j);
std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

// Columns n,p,samples,successes,fraction; reals in shortest round-trip form.
std::string sweep_csv(std::span<const SweepPoint> rows);

// Undirected DOT: one line per vertex, then one per edge, both ascending.
std::string to_dot(const Graph& g, std::string_view name = "G");

std::string read_file(const std::filesystem::path& path);
// Throws std::runtime_error if the file cannot be written.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace critgraph

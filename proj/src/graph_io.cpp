#include "muspectra/graph_io.hpp"

#include <charconv>
#include <fstream>

namespace muspectra {

using nlohmann::json;

namespace {

int parse_size(std::string_view text, std::string_view spec) {
  int n = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, n);
  if (ec != std::errc{} || ptr != end) {
    throw GraphError("bad size in graph spec '" + std::string(spec) + "'");
  }
  return n;
}

}  // namespace

Graph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw GraphError("graph JSON must be an object");
  for (const char* key : {"vertices", "edges"}) {
    if (!doc.contains(key) || !doc[key].is_array()) {
      throw GraphError(std::string("graph JSON needs an array '") + key + "'");
    }
  }
  std::string name = "inline";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw GraphError("graph 'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw GraphError("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw GraphError("each edge must be a pair of vertex labels, got " + e.dump());
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Graph::build_from_labels(std::move(name), std::move(labels), edges);
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["name"] = g.name();
  doc["vertices"] = std::vector<std::string>(g.labels().begin(), g.labels().end());
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  doc["edges"] = std::move(edges);
  return doc;
}

Graph load_graph_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw GraphError("cannot open graph file " + file.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw GraphError(file.string() + ": " + e.what());
  }
  return graph_from_json(doc);
}

bool is_catalog_spec(std::string_view spec) {
  if (spec == "petersen") return true;
  for (std::string_view prefix : {"cycle:", "path:", "complete:"}) {
    if (spec.starts_with(prefix)) return true;
  }
  return false;
}

Graph graph_from_spec(std::string_view spec) {
  if (spec == "petersen") return petersen();
  if (spec.starts_with("@")) return load_graph_file(std::string(spec.substr(1)));
  const auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view kind = spec.substr(0, colon);
    const int n = parse_size(spec.substr(colon + 1), spec);
    if (kind == "cycle") return cycle(n);
    if (kind == "path") return path(n);
    if (kind == "complete") return complete(n);
  }
  throw GraphError("unknown graph '" + std::string(spec) +
                   "' (expected petersen, cycle:<n>, path:<n>, complete:<n> or @file.json)");
}

}  // namespace muspectra

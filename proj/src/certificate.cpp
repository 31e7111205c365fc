#include "muspectra/certificate.hpp"

#include <fstream>

#include "muspectra/graph_io.hpp"

namespace muspectra {

using nlohmann::json;

Certificate make_certificate(const Graph& g, EdgeColoring c, std::string name) {
  Certificate cert{std::move(name), {}, g, std::move(c), std::nullopt, {}};
  if (is_catalog_spec(g.name())) {
    // Catalog graphs are referenced by name only if the name rebuilds them.
    try {
      if (graph_from_spec(g.name()) == g) cert.graph_ref = g.name();
    } catch (const GraphError&) {
    }
  }
  if (validate(g, cert.coloring).empty()) cert.claimed_f = analyze(g, cert.coloring).f;
  return cert;
}

int edge_from_key(const Graph& g, const std::string& key) {
  std::optional<int> found;
  for (std::size_t dash = key.find('-'); dash != std::string::npos;
       dash = key.find('-', dash + 1)) {
    const auto a = g.find_vertex(std::string_view(key).substr(0, dash));
    const auto b = g.find_vertex(std::string_view(key).substr(dash + 1));
    if (!a || !b) continue;
    const auto e = g.find_edge(*a, *b);
    if (!e) throw CertificateError("'" + key + "' is not an edge of " + g.name());
    if (found && *found != *e) throw CertificateError("ambiguous edge key '" + key + "'");
    found = e;
  }
  if (!found) throw CertificateError("edge key '" + key + "' does not name two vertices");
  return *found;
}

Certificate certificate_from_json(const json& doc) {
  if (!doc.is_object()) throw CertificateError("certificate must be a JSON object");
  if (!doc.contains("graph")) throw CertificateError("certificate: missing 'graph'");
  if (!doc.contains("t") || !doc["t"].is_number_integer()) {
    throw CertificateError("certificate: 't' must be an integer");
  }
  if (!doc.contains("colors") || !doc["colors"].is_object()) {
    throw CertificateError("certificate: 'colors' must be an object");
  }

  std::string ref;
  const auto graph = [&] {
    try {
      if (doc["graph"].is_string()) {
        ref = doc["graph"].get<std::string>();
        if (!is_catalog_spec(ref)) throw GraphError("'" + ref + "' is not a catalog graph");
        return graph_from_spec(ref);
      }
      return graph_from_json(doc["graph"]);
    } catch (const GraphError& e) {
      throw CertificateError(std::string("certificate: graph: ") + e.what());
    }
  }();

  std::vector<int> colors(graph.edge_count(), 0);
  std::vector<bool> seen(graph.edge_count(), false);
  for (const auto& [key, value] : doc["colors"].items()) {
    if (!value.is_number_integer()) {
      throw CertificateError("certificate: colors[\"" + key + "\"] must be an integer");
    }
    const int e = edge_from_key(graph, key);
    if (seen[e]) throw CertificateError("certificate: edge " + graph.edge_label(e) + " listed twice");
    seen[e] = true;
    colors[e] = value.get<int>();
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (!seen[e]) throw CertificateError("certificate: edge " + graph.edge_label(e) + " has no color");
  }

  Certificate cert{doc.value("name", std::string{}), ref, graph,
                   EdgeColoring(doc["t"].get<int>(), std::move(colors)), std::nullopt, {}};
  if (doc.contains("claims")) {
    const json& claims = doc["claims"];
    if (!claims.is_object()) throw CertificateError("certificate: 'claims' must be an object");
    if (claims.contains("f")) {
      if (!claims["f"].is_number_integer()) throw CertificateError("certificate: claims.f must be an integer");
      cert.claimed_f = claims["f"].get<int>();
    }
    if (claims.contains("interval")) {
      if (!claims["interval"].is_object()) {
        throw CertificateError("certificate: claims.interval must map labels to booleans");
      }
      for (const auto& [label, flag] : claims["interval"].items()) {
        const auto v = graph.find_vertex(label);
        if (!v) throw CertificateError("certificate: claims.interval: unknown vertex '" + label + "'");
        if (!flag.is_boolean()) throw CertificateError("certificate: claims.interval values must be booleans");
        cert.claimed_interval.emplace_back(*v, flag.get<bool>());
      }
    }
  }
  return cert;
}

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
  nlohmann::ordered_json doc;
  if (!cert.name.empty()) doc["name"] = cert.name;
  if (!cert.graph_ref.empty()) {
    doc["graph"] = cert.graph_ref;
  } else {
    doc["graph"] = graph_to_json(cert.graph);
  }
  doc["t"] = cert.coloring.t();
  nlohmann::ordered_json colors = nlohmann::ordered_json::object();
  for (int e = 0; e < cert.graph.edge_count(); ++e) {
    colors[cert.graph.edge_label(e)] = cert.coloring.color(e);
  }
  doc["colors"] = std::move(colors);
  if (cert.claimed_f || !cert.claimed_interval.empty()) {
    nlohmann::ordered_json claims = nlohmann::ordered_json::object();
    if (cert.claimed_f) claims["f"] = *cert.claimed_f;
    if (!cert.claimed_interval.empty()) {
      nlohmann::ordered_json flags = nlohmann::ordered_json::object();
      for (const auto& [v, flag] : cert.claimed_interval) flags[cert.graph.label(v)] = flag;
      claims["interval"] = std::move(flags);
    }
    doc["claims"] = std::move(claims);
  }
  return doc;
}

Certificate load_certificate_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw CertificateError("cannot open " + file.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CertificateError(file.string() + ": " + e.what());
  }
  try {
    return certificate_from_json(doc);
  } catch (const CertificateError& e) {
    throw CertificateError(file.string() + ": " + e.what());
  }
}

CertificateCheck verify_certificate(const Certificate& cert) {
  CertificateCheck check;
  check.violations = validate(cert.graph, cert.coloring);
  if (!check.violations.empty()) return check;
  check.report = analyze(cert.graph, cert.coloring);
  if (cert.claimed_f && *cert.claimed_f != check.report->f) {
    check.mismatches.push_back("claimed f=" + std::to_string(*cert.claimed_f) + ", actual f=" +
                               std::to_string(check.report->f));
  }
  for (const auto& [v, flag] : cert.claimed_interval) {
    if (check.report->interval[v] != flag) {
      check.mismatches.push_back("vertex " + cert.graph.label(v) + " claimed " +
                                 (flag ? "interval" : "non-interval") + ", spectrum " +
                                 to_string(check.report->spectra[v]));
    }
  }
  return check;
}

}  // namespace muspectra

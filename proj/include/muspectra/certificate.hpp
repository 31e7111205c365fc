#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "muspectra/coloring.hpp"
#include "muspectra/graph.hpp"

namespace muspectra {

/// Malformed certificate document (as opposed to a well-formed certificate
/// whose coloring or claims are wrong).
class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A graph, a coloring of it and what the coloring is claimed to achieve.
/// On disk edges are keyed by label pairs so files do not depend on
/// internal edge indices.
struct Certificate {
  std::string name;
  std::string graph_ref;  // catalog spec, empty when the graph is inline
  Graph graph;
  EdgeColoring coloring;
  std::optional<int> claimed_f;
  std::vector<std::pair<int, bool>> claimed_interval;  // (vertex, flag)
};

Certificate make_certificate(const Graph& g, EdgeColoring c, std::string name = {});

Certificate certificate_from_json(const nlohmann::json& doc);
nlohmann::ordered_json certificate_to_json(const Certificate& cert);
Certificate load_certificate_file(const std::filesystem::path& file);

/// Edge index for a `<label>-<label>` key, accepting either endpoint order.
int edge_from_key(const Graph& g, const std::string& key);

struct CertificateCheck {
  std::vector<Violation> violations;
  std::optional<SpectrumReport> report;
  std::vector<std::string> mismatches;

  bool ok() const { return violations.empty() && mismatches.empty(); }
};

CertificateCheck verify_certificate(const Certificate& cert);

}  // namespace muspectra

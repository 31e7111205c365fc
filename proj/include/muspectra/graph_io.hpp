#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "muspectra/graph.hpp"

namespace muspectra {

// {"name": str, "vertices": [str...], "edges": [[str,str]...]}
Graph graph_from_json(const nlohmann::json& doc);
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph load_graph_file(const std::filesystem::path& file);

/// Resolves `petersen`, `cycle:<n>`, `path:<n>`, `complete:<n>` or
/// `@file.json`. Throws GraphError on anything else.
Graph graph_from_spec(std::string_view spec);

/// Catalog names only (no `@file`); used when a certificate refers to a
/// graph by name.
bool is_catalog_spec(std::string_view spec);

}  // namespace muspectra

#pragma once

// GraphDocument JSON:
//   {"vertices": ["u", "v"], "edges": [{"name": "f", "src": "u", "dst": "u"}, ...]}

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lpa/graph.hpp"

namespace lpa {

// Throw GraphError on malformed JSON, wrong shape, or duplicate names.
Graph graph_from_json(const nlohmann::json& doc);
Graph parse_graph_document(std::string_view text);
Graph load_graph_document(const std::filesystem::path& path);

nlohmann::json graph_to_json(const Graph& g);
// Two-space indented, trailing newline.
std::string serialize_graph_document(const Graph& g);

}  // namespace lpa

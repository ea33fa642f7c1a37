#include "lpa/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "lpa/error.hpp"

namespace lpa {

using nlohmann::json;

namespace {

const std::string& require_string(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string())
        throw GraphError(std::string(where) + " needs a string field \"" + key + "\"");
    return it->get_ref<const std::string&>();
}

}  // namespace

Graph graph_from_json(const json& doc) {
    if (!doc.is_object()) throw GraphError("graph document must be a JSON object");
    auto vit = doc.find("vertices");
    if (vit == doc.end() || !vit->is_array()) throw GraphError("graph document needs a \"vertices\" array");
    std::vector<std::string> vertices;
    for (const auto& v : *vit) {
        if (!v.is_string()) throw GraphError("vertex names must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<EdgeSpec> edges;
    if (auto eit = doc.find("edges"); eit != doc.end()) {
        if (!eit->is_array()) throw GraphError("\"edges\" must be an array");
        for (const auto& e : *eit) {
            if (!e.is_object()) throw GraphError("each edge must be an object");
            edges.push_back({require_string(e, "name", "edge"), require_string(e, "src", "edge"),
                             require_string(e, "dst", "edge")});
        }
    }
    return Graph::from_spec(std::move(vertices), edges);
}

Graph parse_graph_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphError(std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(doc);
}

Graph load_graph_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open graph file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_document(buf.str());
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"name", e.name}, {"src", g.vertex_name(e.source)}, {"dst", g.vertex_name(e.range)}});
    json vertices = json::array();
    for (const auto& n : g.vertex_names()) vertices.push_back(n);
    return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string serialize_graph_document(const Graph& g) { return graph_to_json(g).dump(2) + "\n"; }

}  // namespace lpa

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lpa/error.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/verify.hpp"

using namespace lpa;

TEST_CASE("parse a graph document") {
    auto g = parse_graph_document(R"({"vertices": ["u", "v"],
        "edges": [{"name": "f", "src": "u", "dst": "u"}, {"name": "g", "src": "u", "dst": "v"}]})");
    CHECK(g == fixtures::loop_exit());
    auto bare = parse_graph_document(R"({"vertices": ["a"]})");
    CHECK(bare.vertex_count() == 1);
    CHECK(bare.edge_count() == 0);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_graph_document("{"), GraphError);
    CHECK_THROWS_AS(parse_graph_document("[]"), GraphError);
    CHECK_THROWS_AS(parse_graph_document(R"({"edges": []})"), GraphError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices": [1]})"), GraphError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices": ["a", "a"]})"), GraphError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices": ["a"], "edges": {}})"), GraphError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices": ["a"], "edges": [{"name": "e", "src": "a"}]})"),
                    GraphError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices": ["a"], "edges": [{"name": "e", "src": "a", "dst": "b"}]})"),
                    GraphError);
    CHECK_THROWS_AS(load_graph_document("/nonexistent/graph.json"), GraphError);
}

TEST_CASE("serialization format") {
    auto text = serialize_graph_document(fixtures::path_ab());
    CHECK(text.back() == '\n');
    CHECK(text.find("\n  \"edges\"") != std::string::npos);
    CHECK(parse_graph_document(text) == fixtures::path_ab());
}

TEST_CASE("round trip preserves structure") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, 6, 10, trial % 2 == 0);
        auto text = serialize_graph_document(g);
        auto back = parse_graph_document(text);
        CHECK(back == g);
        CHECK(serialize_graph_document(back) == text);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
}

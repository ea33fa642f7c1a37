#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "lpa/error.hpp"
#include "lpa/graph.hpp"
#include "lpa/verify.hpp"

using namespace lpa;

namespace {

std::vector<std::string> names(const Graph& g, const VertexSet& s) { return sorted_names(g, s); }
using Names = std::vector<std::string>;

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(Graph::from_spec({"a", "a"}, {}), GraphError);
    CHECK_THROWS_AS(Graph::from_spec({"a"}, {{"e", "a", "b"}}), GraphError);
    CHECK_THROWS_AS(Graph::from_spec({"a", "b"}, {{"e", "a", "b"}, {"e", "b", "a"}}), GraphError);
    auto g = fixtures::loop_exit();
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(g.vertex("w"), UnknownVertex);
    CHECK(g.out_edges(g.vertex("u")).size() == 2);
    CHECK(g.in_edges(g.vertex("v")).size() == 1);
}

TEST_CASE("vertex sets from different graphs do not mix") {
    auto g = fixtures::loop_exit();
    auto h = fixtures::loop_exit();
    CHECK_THROWS_AS(g.all_vertices() | h.all_vertices(), GraphMismatch);
    auto copy = g;
    CHECK_NOTHROW(copy.all_vertices() & g.no_vertices());
}

TEST_CASE("vertex set algebra") {
    auto g = fixtures::path_abc();
    auto ab = g.vertex_set({"a", "b"});
    auto bc = g.vertex_set({"b", "c"});
    CHECK(names(g, ab | bc) == Names{"a", "b", "c"});
    CHECK(names(g, ab & bc) == Names{"b"});
    CHECK(names(g, ab - bc) == Names{"a"});
    CHECK(names(g, ab.complement()) == Names{"c"});
    CHECK((ab & bc).is_subset_of(ab));
    CHECK_FALSE(ab.is_subset_of(bc));
    CHECK(g.no_vertices().empty());
    CHECK(g.all_vertices().size() == 3);
}

TEST_CASE("regular vertices") {
    auto r = fixtures::loop_exit();
    CHECK(names(r, regular_vertices(r)) == Names{"u"});
    auto e = fixtures::edgeless_ab();
    CHECK(regular_vertices(e).empty());
    auto p = fixtures::path_abc();
    CHECK(names(p, regular_vertices(p)) == Names{"a", "b"});
}

TEST_CASE("tree and backward reach") {
    auto r = fixtures::loop_exit();
    CHECK(names(r, tree(r, "u")) == Names{"u", "v"});
    CHECK(names(r, tree(r, "v")) == Names{"v"});
    auto p = fixtures::path_abc();
    CHECK(names(p, tree(p, "b")) == Names{"b", "c"});
    CHECK_THROWS_AS(tree(p, "z"), UnknownVertex);

    CHECK(names(r, backward_reach(r, r.vertex_set({"v"}))) == Names{"u", "v"});
    CHECK(backward_reach(r, r.no_vertices()).empty());
    auto e = fixtures::edgeless_ab();
    CHECK(names(e, backward_reach(e, e.vertex_set({"a"}))) == Names{"a"});
}

TEST_CASE("cycles up to rotation") {
    auto r = fixtures::loop_exit();
    auto cs = cycles(r);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].length() == 1);
    CHECK(r.edge(cs[0].edges()[0]).name == "f");

    CHECK(cycles(fixtures::path_abc()).empty());

    auto t = fixtures::two_cycle();
    auto tc = cycles(t);
    REQUIRE(tc.size() == 1);
    CHECK(tc[0].length() == 2);
    CHECK(t.edge(tc[0].edges()[0]).name == "e1");

    CHECK_THROWS_AS(Cycle(r, {r.find_edge("g").value()}), std::invalid_argument);
}

TEST_CASE("exits, condition (L) and exit-free cycle vertices") {
    auto r = fixtures::loop_exit();
    CHECK(cycle_has_exit(r, cycles(r).at(0)));
    CHECK(condition_L(r));
    CHECK(exit_free_cycle_vertices(r).empty());

    auto loop = fixtures::single_loop();
    CHECK_FALSE(cycle_has_exit(loop, cycles(loop).at(0)));
    CHECK_FALSE(condition_L(loop));
    CHECK(names(loop, exit_free_cycle_vertices(loop)) == Names{"x"});

    // The loop left behind by removing v from the loop_exit graph.
    auto quotient = Graph::from_spec({"u"}, {{"f", "u", "u"}});
    CHECK_FALSE(cycle_has_exit(quotient, cycles(quotient).at(0)));

    CHECK(condition_L(fixtures::path_abc()));
    auto iso = fixtures::two_cycle_plus_isolated();
    CHECK(names(iso, exit_free_cycle_vertices(iso)) == Names{"a", "b"});
}

TEST_CASE("acyclicity") {
    CHECK(is_acyclic(fixtures::path_abc()));
    CHECK_FALSE(is_acyclic(fixtures::loop_exit()));
    CHECK(is_acyclic(fixtures::edgeless_ab()));
    CHECK(is_acyclic(Graph{}));
}

TEST_CASE("parallel edges give distinct cycles") {
    auto g = Graph::from_spec({"a", "b"}, {{"p", "a", "b"}, {"q", "a", "b"}, {"r", "b", "a"}});
    CHECK(cycles(g).size() == 2);
    CHECK(condition_L(g));  // each cycle exits through the other parallel edge
}

TEST_CASE("graph predicates agree with brute force on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(rng, 5, 8, trial % 3 == 0);
        std::set<std::vector<std::string>> got;
        for (const auto& c : cycles(g)) {
            std::vector<std::string> seq;
            for (auto e : c.edges()) seq.push_back(g.edge(e).name);
            CHECK(got.insert(seq).second);
        }
        CHECK(got == brute::cycle_name_sequences(g));
        CHECK(is_acyclic(g) == got.empty());
        CHECK(brute::to_mask(exit_free_cycle_vertices(g)) == brute::exit_free_mask(g));
        CHECK(condition_L(g) == exit_free_cycle_vertices(g).empty());
        if (is_acyclic(g)) CHECK(condition_L(g));

        for (auto v : g.vertices()) {
            auto t = tree(g, v);
            CHECK(brute::to_mask(t) == brute::tree_mask(g, index(v)));
            CHECK(t.contains(v));
            for (auto w : t.members()) CHECK(tree(g, w).is_subset_of(t));
        }
        brute::Mask h = static_cast<brute::Mask>(rng() % (1U << g.vertex_count()));
        auto hs = brute::from_mask(g, h);
        auto back = backward_reach(g, hs);
        CHECK(brute::to_mask(back) == brute::backward_mask(g, h));
        CHECK(hs.is_subset_of(back));
        CHECK(backward_reach(g, back) == back);
        // Complement of a backward-closed set is forward-closed.
        auto rest = back.complement();
        for (const auto& e : g.edges())
            if (rest.contains(e.source)) CHECK(rest.contains(e.range));
    }
}

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "lpa/error.hpp"
#include "lpa/ideal_calculus.hpp"
#include "lpa/oracle.hpp"
#include "lpa/verify.hpp"

using namespace lpa;

TEST_CASE("oracle dimensions") {
    CHECK(OracleAlgebra::build(fixtures::path_ab(), 2).dimension() == 4);
    CHECK(OracleAlgebra::build(fixtures::edgeless_ab(), 2).dimension() == 2);
    CHECK(OracleAlgebra::build(fixtures::fork(), 2).dimension() == 8);
    CHECK(OracleAlgebra::build(fixtures::path_abc(), 3).dimension() == 9);
    CHECK(OracleAlgebra::build(Graph{}, 2).dimension() == 0);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, 5, 6, true);
        std::size_t want = 0;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (g.is_sink(VertexId(v))) want += brute::paths_ending_at(g, v) * brute::paths_ending_at(g, v);
        if (want > 400) continue;
        auto a = OracleAlgebra::build(g, 2);
        CHECK(a.dimension() == want);
    }
}

TEST_CASE("oracle build errors") {
    CHECK_THROWS_AS(OracleAlgebra::build(fixtures::loop_exit(), 2), OracleError);
    CHECK_THROWS_AS(OracleAlgebra::build(fixtures::path_abc(), 2, 8), CutoffExceeded);
    CHECK_THROWS_AS(OracleAlgebra::build(fixtures::path_ab(), 6), std::invalid_argument);
}

TEST_CASE("generator images satisfy the defining relations") {
    auto g = fixtures::path_ab();
    auto a = OracleAlgebra::build(g, 3);
    auto e = g.find_edge("e").value();
    auto va = a.vertex_image(g.vertex("a"));
    auto vb = a.vertex_image(g.vertex("b"));
    CHECK(a.multiply(a.ghost_image(e), a.edge_image(e)) == vb);
    CHECK(a.multiply(a.edge_image(e), a.ghost_image(e)) == va);
    CHECK(is_zero(a.multiply(va, vb)));
    CHECK(a.add(va, vb) != a.zero());
    CHECK(a.path_image(Path{g.vertex("a"), {e}}) == a.edge_image(e));
    CHECK(a.label_text(a.basis_index(g.vertex("b"), 1, 0)) == "e[b;e,b]");
    CHECK(a.degree(a.basis_index(g.vertex("b"), 1, 0)) == 1);
    CHECK(a.degree(a.basis_index(g.vertex("b"), 0, 1)) == -1);
}

TEST_CASE("products are associative and basis shortcuts agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, 4, 5, true);
        auto a = OracleAlgebra::build(g, 3);
        auto x = a.random_element(rng), y = a.random_element(rng), z = a.random_element(rng);
        CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
        // The sum of vertex images is the identity.
        auto one = a.zero();
        for (auto v : g.vertices()) one = a.add(one, a.vertex_image(v));
        CHECK(a.multiply(one, x) == x);
        CHECK(a.multiply(x, one) == x);
        for (std::size_t i = 0; i < a.dimension(); ++i) {
            CHECK(a.multiply_basis_left(i, y) == a.multiply(a.basis_element(i), y));
            CHECK(a.multiply_basis_right(y, i) == a.multiply(y, a.basis_element(i)));
        }
        auto parts = a.homogeneous_components(x);
        auto sum = a.zero();
        for (const auto& [d, c] : parts) {
            for (std::size_t i = 0; i < a.dimension(); ++i)
                if (c[i] != 0) CHECK(a.degree(i) == d);
            sum = a.add(sum, c);
        }
        CHECK(sum == x);
    }
}

TEST_CASE("ideal generation") {
    auto p = fixtures::path_ab();
    auto a = OracleAlgebra::build(p, 2);
    CHECK(ideal_generated_by(a, {a.vertex_image(p.vertex("a"))}).dimension() == 4);
    CHECK(ideal_generated_by(a, {}).dimension() == 0);

    auto e = fixtures::edgeless_ab();
    auto b = OracleAlgebra::build(e, 2);
    auto ia = ideal_generated_by(b, {b.vertex_image(e.vertex("a"))});
    CHECK(ia.dimension() == 1);
    CHECK(sorted_names(e, vertex_set_of(b, ia)) == std::vector<std::string>{"a"});
    CHECK(is_two_sided_ideal(b, ia.space()));
}

TEST_CASE("annihilators") {
    auto e = fixtures::edgeless_ab();
    auto b = OracleAlgebra::build(e, 2);
    auto ia = ideal_generated_by(b, {b.vertex_image(e.vertex("a"))});
    auto pa = perp_subspace(b, ia);
    CHECK(pa.dimension() == 1);
    CHECK(sorted_names(e, vertex_set_of(b, pa)) == std::vector<std::string>{"b"});
    CHECK(perp_subspace(b, pa) == ia);

    auto f = fixtures::fork();
    auto c = OracleAlgebra::build(f, 5);
    auto ib = ideal_generated_by(c, vertex_images(c, f.vertex_set({"b"})));
    CHECK(ib.dimension() == 4);
    auto pb = perp_subspace(c, ib);
    CHECK(sorted_names(f, vertex_set_of(c, pb)) == std::vector<std::string>{"c"});
    CHECK(is_graded_subspace(c, pb.space()));
}

TEST_CASE("graded subspaces") {
    auto p = fixtures::path_ab();
    auto a = OracleAlgebra::build(p, 2);
    auto vb = p.vertex("b");
    auto x = a.add(a.basis_element(a.basis_index(vb, 0, 0)), a.basis_element(a.basis_index(vb, 1, 0)));
    CHECK_FALSE(is_graded_subspace(a, span_of(a, {x})));
    CHECK(is_graded_subspace(a, span_of(a, {a.basis_element(0), a.basis_element(1)})));
    // The two-sided ideal it generates is everything, hence graded.
    auto i = ideal_generated_by(a, {x});
    CHECK(i.dimension() == 4);
    CHECK(is_graded_subspace(a, i.space()));
    CHECK_FALSE(is_two_sided_ideal(a, span_of(a, {x})));
}

TEST_CASE("vertex-generated ideals match the calculus") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, 4, 5, true);
        auto a = OracleAlgebra::build(g, 2);
        for (const auto& h : enumerate_hs_sets(g)) {
            auto i = ideal_generated_by(a, vertex_images(a, h.members()));
            CHECK(vertex_set_of(a, i) == h.members());
            CHECK(is_two_sided_ideal(a, i.space()));
            CHECK(is_graded_subspace(a, i.space()));
            auto pi = perp_subspace(a, i);
            CHECK(vertex_set_of(a, pi) == perp(g, GradedIdeal(h)).vertices());
        }
    }
}

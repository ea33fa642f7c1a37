#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpa/error.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/ideal_calculus.hpp"
#include "lpa/laurent.hpp"
#include "lpa/oracle.hpp"
#include "lpa/report.hpp"
#include "lpa/verify.hpp"

namespace py = pybind11;
using namespace lpa;

namespace {

using Names = std::vector<std::string>;
using Terms = std::map<std::int64_t, std::int64_t>;

Graph make_graph(const Names& vertices, const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
    std::vector<EdgeSpec> specs;
    for (const auto& [name, src, dst] : edges) specs.push_back({name, src, dst});
    return Graph::from_spec(vertices, specs);
}

VertexSet names_to_set(const Graph& g, const Names& names) {
    VertexSet s(g);
    for (const auto& n : names) s.insert(g.vertex(n));
    return s;
}

GradedIdeal ideal_of(const Graph& g, const Names& generators) {
    return ideal_from_generators(g, names_to_set(g, generators));
}

Terms terms_of(const LaurentPolynomial& f) {
    Terms out;
    for (const auto& [d, c] : f.terms()) out[d] = c;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graded and regular ideals of Leavitt path algebras of finite graphs";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<UnknownVertex>(m, "UnknownVertex", PyExc_KeyError);
    py::register_exception<CutoffExceeded>(m, "CutoffExceeded", PyExc_RuntimeError);
    py::register_exception<OracleError>(m, "OracleError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("vertices"), py::arg("edges") = std::vector<std::tuple<std::string, std::string, std::string>>{},
             "Edges are (name, source, range) triples.")
        .def_static("from_json", [](const std::string& text) { return parse_graph_document(text); })
        .def("to_json", &serialize_graph_document)
        .def_property_readonly("vertices", [](const Graph& g) { return Names(g.vertex_names().begin(), g.vertex_names().end()); })
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (const auto& e : g.edges())
                                       out.emplace_back(e.name, g.vertex_name(e.source), g.vertex_name(e.range));
                                   return out;
                               })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                   " edges)";
        });

    m.def("regular_vertices", [](const Graph& g) { return sorted_names(g, regular_vertices(g)); });
    m.def("tree", [](const Graph& g, const std::string& v) { return sorted_names(g, tree(g, v)); });
    m.def("backward_reach",
          [](const Graph& g, const Names& h) { return sorted_names(g, backward_reach(g, names_to_set(g, h))); });
    m.def("cycles", [](const Graph& g) {
        std::vector<Names> out;
        for (const auto& c : cycles(g)) {
            Names seq;
            for (auto e : c.edges()) seq.push_back(g.edge(e).name);
            out.push_back(seq);
        }
        return out;
    });
    m.def("condition_L", &condition_L);
    m.def("is_acyclic", &is_acyclic);
    m.def("exit_free_cycle_vertices", [](const Graph& g) { return sorted_names(g, exit_free_cycle_vertices(g)); });

    m.def("is_hereditary", [](const Graph& g, const Names& h) { return is_hereditary(g, names_to_set(g, h)); });
    m.def("is_saturated", [](const Graph& g, const Names& h) { return is_saturated(g, names_to_set(g, h)); });
    m.def("hs_closure",
          [](const Graph& g, const Names& x) { return sorted_names(g, hs_closure(g, names_to_set(g, x)).members()); });
    m.def("enumerate_hs_sets", [](const Graph& g) {
        std::vector<Names> out;
        for (const auto& h : enumerate_hs_sets(g)) out.push_back(sorted_names(g, h.members()));
        return out;
    });

    m.def("ideal_from_generators",
          [](const Graph& g, const Names& gens) { return sorted_names(g, ideal_of(g, gens).vertices()); });
    m.def("bar_closure", [](const Graph& g, const Names& gens) { return sorted_names(g, bar_closure(g, ideal_of(g, gens))); });
    m.def("perp", [](const Graph& g, const Names& gens) { return sorted_names(g, perp(g, ideal_of(g, gens)).vertices()); });
    m.def("double_perp",
          [](const Graph& g, const Names& gens) { return sorted_names(g, double_perp(g, ideal_of(g, gens)).vertices()); });
    m.def("is_regular", [](const Graph& g, const Names& gens) { return is_regular(g, ideal_of(g, gens)); });
    m.def("quotient", [](const Graph& g, const Names& gens) { return quotient_graph(g, ideal_of(g, gens).hs_set()); });
    m.def("pc_bijection_check",
          [](const Graph& g, const Names& gens) { return pc_bijection_check(g, ideal_of(g, gens).hs_set()); });
    m.def("maximal_graded_ideals", [](const Graph& g) {
        std::vector<std::pair<Names, std::string>> out;
        for (const auto& mi : maximal_graded_ideals(g)) out.emplace_back(sorted_names(g, mi.ideal.vertices()), to_string(mi.kind));
        return out;
    });
    m.def("_analyze_json", [](const Graph& g, const Names& gens) {
        return report_to_json(g, analyze(g, names_to_set(g, gens))).dump();
    });

    m.def(
        "oracle_dimension", [](const Graph& g, std::uint32_t prime) { return OracleAlgebra::build(g, prime).dimension(); },
        py::arg("graph"), py::arg("prime") = 2);
    m.def(
        "oracle_agrees",
        [](const Graph& g, std::uint32_t prime) {
            auto a = check_oracle_agreement(g, prime);
            return a.perp_complement && a.double_perp_trees && a.regularity_criterion;
        },
        py::arg("graph"), py::arg("prime") = 2,
        "True when the matrix oracle and the vertex-set calculus agree on every graded ideal.");

    m.def(
        "laurent_mul",
        [](const Terms& f, const Terms& g, std::uint32_t prime) {
            PrimeField k(prime);
            return terms_of(LaurentPolynomial::from_terms(k, f) * LaurentPolynomial::from_terms(k, g));
        },
        py::arg("f"), py::arg("g"), py::arg("prime"));
    m.def(
        "laurent_perp_is_zero",
        [](const Terms& f, std::uint32_t prime) { return laurent_perp_is_zero(LaurentPolynomial::from_terms(PrimeField(prime), f)); },
        py::arg("f"), py::arg("prime"));

    m.def(
        "_verify_json",
        [](std::size_t max_vertices, std::size_t max_edges, std::size_t trials, std::uint64_t seed, std::uint32_t prime) {
            VerifyOptions o;
            o.max_vertices = max_vertices;
            o.max_edges = max_edges;
            o.trials = trials;
            o.seed = seed;
            o.prime = prime;
            py::gil_scoped_release release;
            return matrix_to_json(run_verification(o)).dump();
        },
        py::arg("max_vertices") = 5, py::arg("max_edges") = 8, py::arg("trials") = 500, py::arg("seed") = 42,
        py::arg("prime") = 2);
}

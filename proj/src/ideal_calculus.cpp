#include "lpa/ideal_calculus.hpp"

#include <algorithm>
#include <string>

#include "lpa/error.hpp"

namespace lpa {

namespace {

HereditarySaturatedSet checked_hs(const Graph& g, VertexSet s, const char* what) {
    if (!is_hereditary(g, s) || !is_saturated(g, s))
        throw InvariantViolation(std::string(what) + " is not hereditary and saturated");
    return HereditarySaturatedSet(g, std::move(s));
}

VertexSet double_perp_vertices(const Graph& g, const VertexSet& bar) {
    VertexSet out(g);
    for (auto w : g.vertices())
        if (tree(g, w).is_subset_of(bar)) out.insert(w);
    return out;
}

}  // namespace

GradedIdeal ideal_from_generators(const Graph& g, const VertexSet& x) {
    return GradedIdeal(hs_closure(g, x));
}

VertexSet bar_closure(const Graph& g, const GradedIdeal& j) {
    return backward_reach(g, j.vertices());
}

GradedIdeal perp(const Graph& g, const GradedIdeal& j) {
    return GradedIdeal(checked_hs(g, bar_closure(g, j).complement(), "complement of H-bar"));
}

GradedIdeal double_perp(const Graph& g, const GradedIdeal& j) {
    auto via_trees = double_perp_vertices(g, bar_closure(g, j));
    GradedIdeal result(checked_hs(g, via_trees, "double annihilator set"));
    if (perp(g, perp(g, j)) != result)
        throw InvariantViolation("tree description of the double annihilator disagrees with perp(perp)");
    return result;
}

bool is_regular(const Graph& g, const GradedIdeal& j) {
    return j.vertices() == double_perp_vertices(g, bar_closure(g, j));
}

Graph quotient_graph(const Graph& g, const HereditarySaturatedSet& h) {
    const auto& removed = h.members();
    std::vector<std::string> names;
    for (auto v : g.vertices())
        if (!removed.contains(v)) names.push_back(g.vertex_name(v));
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edges())
        if (!removed.contains(e.range))
            edges.push_back({e.name, g.vertex_name(e.source), g.vertex_name(e.range)});
    return Graph::from_spec(std::move(names), edges);
}

bool pc_bijection_check(const Graph& g, const HereditarySaturatedSet& h) {
    auto lhs = sorted_names(g, exit_free_cycle_vertices(g) - h.members());
    auto q = quotient_graph(g, h);
    auto rhs = sorted_names(q, exit_free_cycle_vertices(q));
    return lhs == rhs;
}

RegularityReport analyze(const Graph& g, const VertexSet& generators) {
    auto ideal = ideal_from_generators(g, generators);
    auto bar = bar_closure(g, ideal);
    auto perp_ideal = perp(g, ideal);
    auto dperp = double_perp(g, ideal);
    auto q = quotient_graph(g, ideal.hs_set());
    RegularityReport r{
        .generators = generators,
        .ideal = ideal,
        .bar_closure = bar,
        .perp_set = perp_ideal.vertices(),
        .double_perp_set = dperp.vertices(),
        .is_regular = ideal.vertices() == dperp.vertices(),
        .quotient = q,
        .quotient_condition_L = condition_L(q),
        .exit_free_cycle_vertices = exit_free_cycle_vertices(g),
        .pc_bijection_holds = pc_bijection_check(g, ideal.hs_set()),
    };
    return r;
}

const char* to_string(MaximalKind k) noexcept {
    switch (k) {
        case MaximalKind::regular: return "regular";
        case MaximalKind::perp_zero: return "perp_zero";
        case MaximalKind::both: return "both";
    }
    return "?";
}

std::vector<MaximalIdeal> maximal_graded_ideals(const Graph& g) {
    auto all = enumerate_hs_sets(g);
    const auto everything = g.all_vertices();
    std::vector<MaximalIdeal> out;
    for (const auto& h : all) {
        if (h.members() == everything) continue;
        bool maximal = std::none_of(all.begin(), all.end(), [&](const auto& other) {
            return other.members() != everything && other.members() != h.members() &&
                   h.members().is_subset_of(other.members());
        });
        if (!maximal) continue;
        GradedIdeal j(h);
        bool regular = is_regular(g, j);
        bool perp_zero = perp(g, j).vertices().empty();
        if (!regular && !perp_zero)
            throw InvariantViolation("maximal graded ideal is neither regular nor of zero annihilator");
        out.push_back({j, regular && perp_zero ? MaximalKind::both
                          : regular             ? MaximalKind::regular
                                                : MaximalKind::perp_zero});
    }
    return out;
}

}  // namespace lpa

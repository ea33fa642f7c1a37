#pragma once

// Graded ideals of the Leavitt path algebra of a finite graph, carried
// entirely by their hereditary saturated vertex sets. For finite graphs the
// map J -> H(J) is a lattice isomorphism onto the hereditary saturated sets,
// so everything below is set arithmetic on vertices.

#include <optional>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/hereditary.hpp"

namespace lpa {

// I(H), the ideal generated by the vertices of H.
class GradedIdeal {
public:
    explicit GradedIdeal(HereditarySaturatedSet h) : h_(std::move(h)) {}

    const HereditarySaturatedSet& hs_set() const noexcept { return h_; }
    const VertexSet& vertices() const noexcept { return h_.members(); }

    friend bool operator==(const GradedIdeal&, const GradedIdeal&) = default;

private:
    HereditarySaturatedSet h_;
};

struct RegularityReport {
    VertexSet generators;
    GradedIdeal ideal;
    VertexSet bar_closure;
    VertexSet perp_set;
    VertexSet double_perp_set;
    bool is_regular = false;
    Graph quotient;
    bool quotient_condition_L = false;
    VertexSet exit_free_cycle_vertices;
    // Always computed for finite graphs; guaranteed true when is_regular.
    std::optional<bool> pc_bijection_holds;
};

GradedIdeal ideal_from_generators(const Graph& g, const VertexSet& x);

// H-bar: every vertex with a path into H.
VertexSet bar_closure(const Graph& g, const GradedIdeal& j);

// Vertex set of the annihilator: complement of H-bar. Throws
// InvariantViolation if that complement is not hereditary and saturated.
GradedIdeal perp(const Graph& g, const GradedIdeal& j);

// {w : T(w) contained in H-bar}. Cross-checked against perp(perp(j)).
GradedIdeal double_perp(const Graph& g, const GradedIdeal& j);

bool is_regular(const Graph& g, const GradedIdeal& j);

// E/H: drop the vertices of H and every edge ranging into H.
Graph quotient_graph(const Graph& g, const HereditarySaturatedSet& h);

// P_c(E) \ H equals P_c(E/H) as sets of vertex names.
bool pc_bijection_check(const Graph& g, const HereditarySaturatedSet& h);

RegularityReport analyze(const Graph& g, const VertexSet& generators);

enum class MaximalKind { regular, perp_zero, both };

const char* to_string(MaximalKind k) noexcept;

struct MaximalIdeal {
    GradedIdeal ideal;
    MaximalKind kind;
};

// Maximal proper hereditary saturated sets with their classification.
// Throws CutoffExceeded like enumerate_hs_sets. Throws InvariantViolation if
// an element is neither regular nor has zero annihilator.
std::vector<MaximalIdeal> maximal_graded_ideals(const Graph& g);

}  // namespace lpa

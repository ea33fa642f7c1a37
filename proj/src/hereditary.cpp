#include "lpa/hereditary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lpa/error.hpp"

namespace lpa {

namespace {

void require_graph(const Graph& g, const VertexSet& s) {
    if (s.graph_id() != g.id()) throw GraphMismatch();
}

// One forward pass: add ranges of edges leaving h. Returns whether h grew.
bool hereditary_step(const Graph& g, VertexSet& h) {
    bool grew = false;
    for (const auto& e : g.edges()) {
        if (h.contains(e.source) && !h.contains(e.range)) {
            h.insert(e.range);
            grew = true;
        }
    }
    return grew;
}

bool all_ranges_inside(const Graph& g, VertexId v, const VertexSet& h) {
    for (auto e : g.out_edges(v))
        if (!h.contains(g.edge(e).range)) return false;
    return true;
}

bool saturation_step(const Graph& g, VertexSet& h) {
    bool grew = false;
    for (auto v : g.vertices()) {
        if (h.contains(v) || g.is_sink(v)) continue;
        if (all_ranges_inside(g, v, h)) {
            h.insert(v);
            grew = true;
        }
    }
    return grew;
}

}  // namespace

bool is_hereditary(const Graph& g, const VertexSet& h) {
    require_graph(g, h);
    for (const auto& e : g.edges())
        if (h.contains(e.source) && !h.contains(e.range)) return false;
    return true;
}

bool is_saturated(const Graph& g, const VertexSet& h) {
    require_graph(g, h);
    for (auto v : g.vertices())
        if (!h.contains(v) && !g.is_sink(v) && all_ranges_inside(g, v, h)) return false;
    return true;
}

HereditarySaturatedSet::HereditarySaturatedSet(const Graph& g, VertexSet members)
    : members_(std::move(members)) {
    if (!is_hereditary(g, members_)) throw std::invalid_argument("vertex set is not hereditary");
    if (!is_saturated(g, members_)) throw std::invalid_argument("vertex set is not saturated");
}

HereditarySaturatedSet hs_closure(const Graph& g, const VertexSet& x) {
    require_graph(g, x);
    VertexSet h = x;
    for (;;) {
        while (hereditary_step(g, h)) {}
        if (!saturation_step(g, h)) break;
    }
    return HereditarySaturatedSet(HereditarySaturatedSet::Trusted{}, std::move(h));
}

std::vector<HereditarySaturatedSet> enumerate_hs_sets(const Graph& g) {
    const auto n = g.vertex_count();
    if (n > kEnumerationCutoff)
        throw CutoffExceeded("lattice enumeration supports at most " +
                             std::to_string(kEnumerationCutoff) + " vertices, graph has " +
                             std::to_string(n));
    std::vector<HereditarySaturatedSet> out;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        VertexSet s(g);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1U) s.insert(VertexId(i));
        if (is_hereditary(g, s) && is_saturated(g, s))
            out.push_back(HereditarySaturatedSet(HereditarySaturatedSet::Trusted{}, std::move(s)));
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return size_then_names_less(g, a.members(), b.members());
    });
    return out;
}

HereditarySaturatedSet hs_meet(const Graph& g, const HereditarySaturatedSet& a,
                               const HereditarySaturatedSet& b) {
    require_graph(g, a.members());
    require_graph(g, b.members());
    return HereditarySaturatedSet(HereditarySaturatedSet::Trusted{}, a.members() & b.members());
}

HereditarySaturatedSet hs_join(const Graph& g, const HereditarySaturatedSet& a,
                               const HereditarySaturatedSet& b) {
    require_graph(g, a.members());
    require_graph(g, b.members());
    return hs_closure(g, a.members() | b.members());
}

}  // namespace lpa

#pragma once

// Independent reference implementations used to produce expected values.
// They work on bitmasks and adjacency matrices and share no code with the
// library beyond reading a Graph's vertex and edge lists.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa::brute {

using Mask = std::uint32_t;

inline Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (auto v : s.members()) m |= Mask{1} << index(v);
    return m;
}

inline VertexSet from_mask(const Graph& g, Mask m) {
    VertexSet s(g);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if ((m >> i) & 1U) s.insert(VertexId(i));
    return s;
}

// reach[i][j]: a path (possibly trivial) from i to j. Floyd-Warshall.
inline std::vector<std::vector<bool>> reachability(const Graph& g) {
    const auto n = g.vertex_count();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (const auto& e : g.edges()) r[index(e.source)][index(e.range)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
}

inline Mask tree_mask(const Graph& g, std::size_t v) {
    auto r = reachability(g);
    Mask m = 0;
    for (std::size_t j = 0; j < g.vertex_count(); ++j)
        if (r[v][j]) m |= Mask{1} << j;
    return m;
}

inline Mask backward_mask(const Graph& g, Mask h) {
    auto r = reachability(g);
    Mask m = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = 0; j < g.vertex_count(); ++j)
            if (((h >> j) & 1U) && r[i][j]) m |= Mask{1} << i;
    return m;
}

inline bool hereditary(const Graph& g, Mask h) {
    // Closed under all paths, checked through the reachability matrix.
    auto r = reachability(g);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = 0; j < g.vertex_count(); ++j)
            if (((h >> i) & 1U) && r[i][j] && !((h >> j) & 1U)) return false;
    return true;
}

inline bool saturated(const Graph& g, Mask h) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if ((h >> v) & 1U) continue;
        bool emits = false, all_in = true;
        for (const auto& e : g.edges()) {
            if (index(e.source) != v) continue;
            emits = true;
            if (!((h >> index(e.range)) & 1U)) all_in = false;
        }
        if (emits && all_in) return false;
    }
    return true;
}

inline std::vector<Mask> hs_masks(const Graph& g) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << g.vertex_count()); ++m)
        if (hereditary(g, m) && saturated(g, m)) out.push_back(m);
    return out;
}

// Least hs superset as the intersection of every hs superset.
inline Mask closure(const Graph& g, Mask x) {
    Mask out = (Mask{1} << g.vertex_count()) - 1;
    for (auto m : hs_masks(g))
        if ((m & x) == x) out &= m;
    return out;
}

// Cycles as sorted lists of canonical edge-name sequences, by trying every
// edge sequence of length up to |V|.
inline std::set<std::vector<std::string>> cycle_name_sequences(const Graph& g) {
    std::set<std::vector<std::string>> out;
    const auto n = g.vertex_count();
    std::vector<std::size_t> seq;
    auto emit = [&] {
        std::vector<std::string> names;
        for (auto e : seq) names.push_back(g.edges()[e].name);
        auto best = names;
        for (std::size_t r = 1; r < names.size(); ++r) {
            std::vector<std::string> rot(names.begin() + r, names.end());
            rot.insert(rot.end(), names.begin(), names.begin() + r);
            best = std::min(best, rot);
        }
        out.insert(best);
    };
    auto rec = [&](auto&& self) -> void {
        if (!seq.empty()) {
            const auto& first = g.edges()[seq.front()];
            const auto& last = g.edges()[seq.back()];
            if (last.range == first.source) emit();
        }
        if (seq.size() == n) return;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto& cand = g.edges()[e];
            if (!seq.empty() && g.edges()[seq.back()].range != cand.source) continue;
            bool repeat = false;
            for (auto s : seq)
                if (g.edges()[s].source == cand.source) repeat = true;
            if (repeat) continue;
            seq.push_back(e);
            self(self);
            seq.pop_back();
        }
    };
    rec(rec);
    return out;
}

// v lies on an exit-free cycle iff following the unique outgoing edge from v
// stays on out-degree-one vertices and returns to v.
inline Mask exit_free_mask(const Graph& g) {
    const auto n = g.vertex_count();
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& e : g.edges()) out[index(e.source)].push_back(index(e.range));
    Mask m = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t at = v;
        for (std::size_t step = 0; step < n; ++step) {
            if (out[at].size() != 1) break;
            at = out[at][0];
            if (at == v) {
                m |= Mask{1} << v;
                break;
            }
        }
    }
    return m;
}

// Number of paths (trivial included) ending at v, by dynamic programming over
// path length on an acyclic graph.
inline std::size_t paths_ending_at(const Graph& g, std::size_t v) {
    const auto n = g.vertex_count();
    std::vector<std::size_t> ways(n, 0);  // paths of the current length from each vertex to v
    ways[v] = 1;
    std::size_t total = 1;
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<std::size_t> next(n, 0);
        for (const auto& e : g.edges()) next[index(e.source)] += ways[index(e.range)];
        ways = next;
        for (auto w : ways) total += w;
    }
    return total;
}

}  // namespace lpa::brute

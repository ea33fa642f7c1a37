#include "lpa/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <stdexcept>

#include "lpa/error.hpp"

namespace lpa {

namespace {

std::uint64_t next_graph_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

constexpr std::size_t kWordBits = 64;

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph() : id_(next_graph_id()) {}

Graph Graph::from_spec(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) {
    Graph g;
    g.vertex_names_ = std::move(vertices);
    g.out_edges_.resize(g.vertex_names_.size());
    g.in_edges_.resize(g.vertex_names_.size());
    for (std::size_t i = 0; i < g.vertex_names_.size(); ++i) {
        auto [it, fresh] = g.vertex_index_.emplace(g.vertex_names_[i], VertexId(i));
        if (!fresh) throw GraphError("duplicate vertex name '" + g.vertex_names_[i] + "'");
    }
    g.edges_.reserve(edges.size());
    for (const auto& spec : edges) {
        auto src = g.find_vertex(spec.source);
        auto dst = g.find_vertex(spec.range);
        if (!src) throw GraphError("edge '" + spec.name + "' has unknown source '" + spec.source + "'");
        if (!dst) throw GraphError("edge '" + spec.name + "' has unknown range '" + spec.range + "'");
        auto id = static_cast<EdgeId>(g.edges_.size());
        if (!g.edge_index_.emplace(spec.name, id).second)
            throw GraphError("duplicate edge name '" + spec.name + "'");
        g.edges_.push_back(Edge{spec.name, *src, *dst});
        g.out_edges_[index(*src)].push_back(id);
        g.in_edges_[index(*dst)].push_back(id);
    }
    return g;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw UnknownVertex(std::string(name));
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
    auto it = edge_index_.find(std::string(name));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(vertex_count());
    for (std::size_t i = 0; i < vertex_count(); ++i) out.push_back(VertexId(i));
    return out;
}

std::vector<EdgeSpec> Graph::edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_)
        out.push_back({e.name, vertex_name(e.source), vertex_name(e.range)});
    return out;
}

VertexSet Graph::no_vertices() const { return VertexSet(*this); }

VertexSet Graph::all_vertices() const { return VertexSet(*this).complement(); }

VertexSet Graph::vertex_set(std::span<const std::string> names) const {
    VertexSet s(*this);
    for (const auto& n : names) s.insert(vertex(n));
    return s;
}

VertexSet Graph::vertex_set(std::initializer_list<std::string_view> names) const {
    VertexSet s(*this);
    for (auto n : names) s.insert(vertex(n));
    return s;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertex_names_ != b.vertex_names_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.name != y.name || x.source != y.source || x.range != y.range) return false;
    }
    return true;
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(const Graph& g)
    : graph_id_(g.id()),
      universe_(g.vertex_count()),
      words_((g.vertex_count() + kWordBits - 1) / kWordBits, 0) {}

bool VertexSet::contains(VertexId v) const {
    auto i = index(v);
    if (i >= universe_) return false;
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void VertexSet::insert(VertexId v) {
    auto i = index(v);
    if (i >= universe_) throw std::out_of_range("vertex id outside graph");
    words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void VertexSet::erase(VertexId v) {
    auto i = index(v);
    if (i >= universe_) return;
    words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

std::size_t VertexSet::size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < universe_; ++i)
        if (contains(VertexId(i))) out.push_back(VertexId(i));
    return out;
}

void VertexSet::require_same_graph(const VertexSet& other) const {
    if (graph_id_ != other.graph_id_ || universe_ != other.universe_) throw GraphMismatch();
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    require_same_graph(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

VertexSet VertexSet::complement() const {
    VertexSet out = *this;
    for (auto& w : out.words_) w = ~w;
    if (auto tail = universe_ % kWordBits; tail != 0 && !out.words_.empty())
        out.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    require_same_graph(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    require_same_graph(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    require_same_graph(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::vector<std::string> sorted_names(const Graph& g, const VertexSet& s) {
    std::vector<std::string> out;
    for (auto v : s.members()) out.push_back(g.vertex_name(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool size_then_names_less(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return sorted_names(g, a) < sorted_names(g, b);
}

// ---------------------------------------------------------------- Path / Cycle

VertexId Path::source(const Graph& g) const {
    return edges.empty() ? base : g.edge(edges.front()).source;
}

VertexId Path::range(const Graph& g) const {
    return edges.empty() ? base : g.edge(edges.back()).range;
}

bool is_valid_path(const Graph& g, const Path& p) {
    if (index(p.base) >= g.vertex_count()) return false;
    VertexId at = p.base;
    for (auto e : p.edges) {
        if (index(e) >= g.edge_count()) return false;
        if (g.edge(e).source != at) return false;
        at = g.edge(e).range;
    }
    return true;
}

namespace {

std::vector<std::string> edge_names(const Graph& g, std::span<const EdgeId> edges) {
    std::vector<std::string> out;
    out.reserve(edges.size());
    for (auto e : edges) out.push_back(g.edge(e).name);
    return out;
}

}  // namespace

Cycle::Cycle(const Graph& g, std::vector<EdgeId> edges) {
    if (edges.empty()) throw std::invalid_argument("a cycle must have at least one edge");
    Path p{g.edge(edges.front()).source, edges};
    if (!is_valid_path(g, p) || p.range(g) != p.source(g))
        throw std::invalid_argument("edge sequence is not a closed path");
    std::vector<VertexId> sources;
    for (auto e : edges) sources.push_back(g.edge(e).source);
    std::sort(sources.begin(), sources.end());
    if (std::adjacent_find(sources.begin(), sources.end()) != sources.end())
        throw std::invalid_argument("cycle revisits a vertex");

    auto best = edges;
    auto best_names = edge_names(g, best);
    for (std::size_t r = 1; r < edges.size(); ++r) {
        std::vector<EdgeId> rotated(edges.begin() + r, edges.end());
        rotated.insert(rotated.end(), edges.begin(), edges.begin() + r);
        auto names = edge_names(g, rotated);
        if (names < best_names) {
            best = std::move(rotated);
            best_names = std::move(names);
        }
    }
    edges_ = std::move(best);
}

std::vector<VertexId> Cycle::vertices(const Graph& g) const {
    std::vector<VertexId> out;
    for (auto e : edges_) out.push_back(g.edge(e).source);
    return out;
}

Path Cycle::as_path(const Graph& g) const { return Path{g.edge(edges_.front()).source, edges_}; }

// ---------------------------------------------------------------- predicates

VertexSet regular_vertices(const Graph& g) {
    VertexSet out(g);
    for (auto v : g.vertices())
        if (!g.out_edges(v).empty()) out.insert(v);
    return out;
}

namespace {

template <typename Next>
VertexSet breadth_first(VertexSet seeds, Next next) {
    std::deque<VertexId> queue;
    for (auto v : seeds.members()) queue.push_back(v);
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : next(v)) {
            if (!seeds.contains(w)) {
                seeds.insert(w);
                queue.push_back(w);
            }
        }
    }
    return seeds;
}

}  // namespace

VertexSet tree(const Graph& g, VertexId v) {
    if (index(v) >= g.vertex_count()) throw std::out_of_range("vertex id outside graph");
    VertexSet seed(g);
    seed.insert(v);
    return breadth_first(std::move(seed), [&](VertexId u) {
        std::vector<VertexId> out;
        for (auto e : g.out_edges(u)) out.push_back(g.edge(e).range);
        return out;
    });
}

VertexSet tree(const Graph& g, std::string_view v) { return tree(g, g.vertex(v)); }

VertexSet backward_reach(const Graph& g, const VertexSet& h) {
    if (h.graph_id() != g.id()) throw GraphMismatch();
    return breadth_first(h, [&](VertexId u) {
        std::vector<VertexId> out;
        for (auto e : g.in_edges(u)) out.push_back(g.edge(e).source);
        return out;
    });
}

std::vector<Cycle> cycles(const Graph& g) {
    // Each cycle is found once, rooted at its least vertex id, by a DFS that
    // only visits vertices with larger ids.
    std::vector<Cycle> found;
    const auto n = g.vertex_count();
    std::vector<bool> on_path(n, false);
    std::vector<EdgeId> stack;

    auto dfs = [&](auto&& self, VertexId root, VertexId at) -> void {
        for (auto e : g.out_edges(at)) {
            auto next = g.edge(e).range;
            if (next == root) {
                stack.push_back(e);
                found.emplace_back(g, stack);
                stack.pop_back();
            } else if (index(next) > index(root) && !on_path[index(next)]) {
                on_path[index(next)] = true;
                stack.push_back(e);
                self(self, root, next);
                stack.pop_back();
                on_path[index(next)] = false;
            }
        }
    };
    for (auto v : g.vertices()) {
        on_path[index(v)] = true;
        dfs(dfs, v, v);
        on_path[index(v)] = false;
    }
    std::sort(found.begin(), found.end(), [&](const Cycle& a, const Cycle& b) {
        return edge_names(g, a.edges()) < edge_names(g, b.edges());
    });
    return found;
}

bool cycle_has_exit(const Graph& g, const Cycle& c) {
    // Sources are distinct, so the cycle uses exactly one edge out of each
    // of its vertices.
    for (auto e : c.edges())
        if (g.out_edges(g.edge(e).source).size() > 1) return true;
    return false;
}

bool condition_L(const Graph& g) {
    for (const auto& c : cycles(g))
        if (!cycle_has_exit(g, c)) return false;
    return true;
}

VertexSet exit_free_cycle_vertices(const Graph& g) {
    VertexSet out(g);
    for (const auto& c : cycles(g))
        if (!cycle_has_exit(g, c))
            for (auto v : c.vertices(g)) out.insert(v);
    return out;
}

bool is_acyclic(const Graph& g) {
    // Kahn's algorithm: acyclic iff every vertex gets peeled.
    std::vector<std::size_t> indegree(g.vertex_count(), 0);
    for (const auto& e : g.edges()) ++indegree[index(e.range)];
    std::vector<VertexId> ready;
    for (auto v : g.vertices())
        if (indegree[index(v)] == 0) ready.push_back(v);
    std::size_t peeled = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++peeled;
        for (auto e : g.out_edges(v))
            if (--indegree[index(g.edge(e).range)] == 0) ready.push_back(g.edge(e).range);
    }
    return peeled == g.vertex_count();
}

Graph remove_vertices(const Graph& g, const VertexSet& removed) {
    std::vector<std::string> names;
    for (auto v : g.vertices())
        if (!removed.contains(v)) names.push_back(g.vertex_name(v));
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edges())
        if (!removed.contains(e.source) && !removed.contains(e.range))
            edges.push_back({e.name, g.vertex_name(e.source), g.vertex_name(e.range)});
    return Graph::from_spec(std::move(names), edges);
}

}  // namespace lpa

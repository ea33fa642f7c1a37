#pragma once

// Finite directed multigraphs and the path/cycle vocabulary used by the
// ideal calculus. Vertices and edges are addressed by dense ids in insertion
// order; names are kept for reporting and I/O.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpa {

enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::size_t index(VertexId v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t index(EdgeId e) noexcept { return static_cast<std::size_t>(e); }

struct Edge {
    std::string name;
    VertexId source;
    VertexId range;
};

// Edge as it appears in input documents, endpoints given by vertex name.
struct EdgeSpec {
    std::string name;
    std::string source;
    std::string range;
};

class VertexSet;

class Graph {
public:
    // The empty graph.
    Graph();

    // Throws GraphError on duplicate vertex/edge names or dangling endpoints.
    static Graph from_spec(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

    std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_.at(index(v)); }
    std::span<const std::string> vertex_names() const noexcept { return vertex_names_; }
    const Edge& edge(EdgeId e) const { return edges_.at(index(e)); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    // Throws UnknownVertex.
    VertexId vertex(std::string_view name) const;
    std::optional<EdgeId> find_edge(std::string_view name) const;

    std::span<const EdgeId> out_edges(VertexId v) const { return out_edges_.at(index(v)); }
    std::span<const EdgeId> in_edges(VertexId v) const { return in_edges_.at(index(v)); }
    bool is_sink(VertexId v) const { return out_edges(v).empty(); }

    std::vector<VertexId> vertices() const;
    std::vector<EdgeSpec> edge_specs() const;

    // Identity token shared by copies; distinguishes unrelated graphs.
    std::uint64_t id() const noexcept { return id_; }

    VertexSet no_vertices() const;
    VertexSet all_vertices() const;
    // Throws UnknownVertex.
    VertexSet vertex_set(std::span<const std::string> names) const;
    VertexSet vertex_set(std::initializer_list<std::string_view> names) const;

    // Structural equality: same vertex names and edges in the same order.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::uint64_t id_;
    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_edges_;
    std::vector<std::vector<EdgeId>> in_edges_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::unordered_map<std::string, EdgeId> edge_index_;
};

// Subset of one graph's vertices. The owning graph's id is part of the value;
// combining sets from different graphs throws GraphMismatch.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(const Graph& g);

    std::uint64_t graph_id() const noexcept { return graph_id_; }
    std::size_t universe_size() const noexcept { return universe_; }

    bool contains(VertexId v) const;
    void insert(VertexId v);
    void erase(VertexId v);

    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    std::vector<VertexId> members() const;
    bool is_subset_of(const VertexSet& other) const;
    VertexSet complement() const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

private:
    void require_same_graph(const VertexSet& other) const;

    std::uint64_t graph_id_ = 0;
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Member names sorted lexicographically; the reporting order for all sets.
std::vector<std::string> sorted_names(const Graph& g, const VertexSet& s);

// Compares by cardinality, then by sorted member names.
bool size_then_names_less(const Graph& g, const VertexSet& a, const VertexSet& b);

// A path e_1...e_n, or the trivial path at `base` when `edges` is empty.
struct Path {
    VertexId base;
    std::vector<EdgeId> edges;

    std::size_t length() const noexcept { return edges.size(); }
    VertexId source(const Graph& g) const;
    VertexId range(const Graph& g) const;
    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

bool is_valid_path(const Graph& g, const Path& p);

// A nontrivial closed path with pairwise distinct edge sources, stored in its
// canonical rotation (least sequence of edge names).
class Cycle {
public:
    // Throws std::invalid_argument unless `edges` forms a cycle of g.
    Cycle(const Graph& g, std::vector<EdgeId> edges);

    std::span<const EdgeId> edges() const noexcept { return edges_; }
    std::size_t length() const noexcept { return edges_.size(); }
    std::vector<VertexId> vertices(const Graph& g) const;
    Path as_path(const Graph& g) const;
    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    std::vector<EdgeId> edges_;
};

// Vertices emitting at least one edge.
VertexSet regular_vertices(const Graph& g);

// T(v): everything reachable from v, v included.
VertexSet tree(const Graph& g, VertexId v);
VertexSet tree(const Graph& g, std::string_view v);

// Sources of paths ending in h (h included).
VertexSet backward_reach(const Graph& g, const VertexSet& h);

// All cycles up to rotation, sorted by canonical edge-name sequence.
std::vector<Cycle> cycles(const Graph& g);

bool cycle_has_exit(const Graph& g, const Cycle& c);
bool condition_L(const Graph& g);
// P_c(E): union of the vertices of exit-free cycles.
VertexSet exit_free_cycle_vertices(const Graph& g);
bool is_acyclic(const Graph& g);

// Sub-graph on the vertices not in `removed`, keeping the edges whose
// endpoints both survive. Names are preserved.
Graph remove_vertices(const Graph& g, const VertexSet& removed);

}  // namespace lpa

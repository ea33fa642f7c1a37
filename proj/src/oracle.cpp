#include "lpa/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "lpa/error.hpp"

namespace lpa {

namespace {

// Paths ending at `sink`, grown backwards one edge at a time; ordered by
// length, then by edge ids. Stops early once n^2 exceeds `cap`.
std::vector<Path> enumerate_paths_into(const Graph& g, VertexId sink, std::size_t cap) {
    std::vector<Path> out{Path{sink, {}}};
    std::size_t frontier_begin = 0;
    while (frontier_begin < out.size()) {
        const std::size_t frontier_end = out.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            const auto start = out[i].source(g);
            for (auto e : g.in_edges(start)) {
                Path longer{g.edge(e).source, {e}};
                longer.edges.insert(longer.edges.end(), out[i].edges.begin(), out[i].edges.end());
                out.push_back(std::move(longer));
                if (out.size() * out.size() > cap) return out;
            }
        }
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(frontier_end), out.end(),
                  [](const Path& a, const Path& b) { return a.edges < b.edges; });
        frontier_begin = frontier_end;
    }
    return out;
}

}  // namespace

OracleAlgebra OracleAlgebra::build(const Graph& g, std::uint32_t p, std::size_t cap) {
    if (!is_acyclic(g)) throw OracleError("oracle algebra requires an acyclic graph");
    OracleAlgebra a(g, PrimeField(p));
    std::size_t dim = 0;
    for (auto v : g.vertices()) {
        if (!g.is_sink(v)) continue;
        auto paths = enumerate_paths_into(g, v, cap);
        const auto n = paths.size();
        if (dim + n * n > cap)
            throw CutoffExceeded("oracle dimension exceeds cap of " + std::to_string(cap));
        a.sinks_.push_back(v);
        a.blocks_[v] = Block{dim, n};
        for (std::size_t i = 0; i < n; ++i) a.path_index_[{paths[i].source(g), paths[i].edges}] = i;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                a.labels_.push_back(BasisLabel{v, r, c});
                a.degrees_.push_back(static_cast<int>(paths[r].length()) -
                                     static_cast<int>(paths[c].length()));
            }
        }
        a.paths_[v] = std::move(paths);
        dim += n * n;
    }
    a.verify_relations();
    return a;
}

const std::vector<Path>& OracleAlgebra::paths_into(VertexId sink) const {
    auto it = paths_.find(sink);
    if (it == paths_.end()) throw std::out_of_range("not a sink of the oracle graph");
    return it->second;
}

std::size_t OracleAlgebra::basis_index(VertexId sink, std::size_t row_path, std::size_t col_path) const {
    const auto& b = blocks_.at(sink);
    return b.offset + row_path * b.size + col_path;
}

std::string OracleAlgebra::label_text(std::size_t i) const {
    const auto& l = label(i);
    const auto& paths = paths_into(l.sink);
    auto path_text = [&](const Path& p) {
        if (p.edges.empty()) return graph_.vertex_name(p.base);
        std::string s;
        for (auto e : p.edges) s += graph_.edge(e).name;
        return s;
    };
    std::ostringstream os;
    os << "e[" << graph_.vertex_name(l.sink) << ";" << path_text(paths[l.row_path]) << ","
       << path_text(paths[l.col_path]) << "]";
    return os.str();
}

AlgebraElement OracleAlgebra::basis_element(std::size_t i) const {
    auto x = zero();
    x.at(i) = 1;
    return x;
}

AlgebraElement OracleAlgebra::vertex_image(VertexId u) const {
    auto x = zero();
    for (auto v : sinks_) {
        const auto& paths = paths_.at(v);
        for (std::size_t i = 0; i < paths.size(); ++i)
            if (paths[i].source(graph_) == u) x[basis_index(v, i, i)] = 1;
    }
    return x;
}

AlgebraElement OracleAlgebra::edge_image(EdgeId f) const {
    auto x = zero();
    const auto& edge = graph_.edge(f);
    for (auto v : sinks_) {
        const auto& paths = paths_.at(v);
        for (std::size_t d = 0; d < paths.size(); ++d) {
            if (paths[d].source(graph_) != edge.range) continue;
            std::vector<EdgeId> longer{f};
            longer.insert(longer.end(), paths[d].edges.begin(), paths[d].edges.end());
            auto fd = path_index_.at({edge.source, longer});
            x[basis_index(v, fd, d)] = 1;
        }
    }
    return x;
}

AlgebraElement OracleAlgebra::ghost_image(EdgeId f) const {
    auto x = zero();
    auto e = edge_image(f);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        const auto& l = labels_[i];
        x[basis_index(l.sink, l.col_path, l.row_path)] = e[i];
    }
    return x;
}

AlgebraElement OracleAlgebra::path_image(const Path& p) const {
    auto x = vertex_image(p.base);
    for (auto e : p.edges) x = multiply(x, edge_image(e));
    return x;
}

AlgebraElement OracleAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    auto z = zero();
    for (const auto& [v, b] : blocks_) {
        const auto n = b.size;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                auto c = x[b.offset + i * n + j];
                if (!c) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    auto d = y[b.offset + j * n + k];
                    if (d) {
                        auto& slot = z[b.offset + i * n + k];
                        slot = field_.add(slot, field_.mul(c, d));
                    }
                }
            }
        }
    }
    return z;
}

AlgebraElement OracleAlgebra::multiply_basis_left(std::size_t i, const AlgebraElement& y) const {
    // e[v;a,b] * y : row b of block v moves to row a.
    const auto& l = labels_.at(i);
    const auto& b = blocks_.at(l.sink);
    auto z = zero();
    for (std::size_t k = 0; k < b.size; ++k)
        z[b.offset + l.row_path * b.size + k] = y[b.offset + l.col_path * b.size + k];
    return z;
}

AlgebraElement OracleAlgebra::multiply_basis_right(const AlgebraElement& y, std::size_t i) const {
    // y * e[v;a,b] : column a of block v moves to column b.
    const auto& l = labels_.at(i);
    const auto& b = blocks_.at(l.sink);
    auto z = zero();
    for (std::size_t k = 0; k < b.size; ++k)
        z[b.offset + k * b.size + l.col_path] = y[b.offset + k * b.size + l.row_path];
    return z;
}

AlgebraElement OracleAlgebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
    auto z = x;
    axpy(field_, 1, y, z);
    return z;
}

AlgebraElement OracleAlgebra::scale(Scalar c, const AlgebraElement& x) const {
    auto z = zero();
    axpy(field_, c % field_.modulus(), x, z);
    return z;
}

std::map<int, AlgebraElement> OracleAlgebra::homogeneous_components(const AlgebraElement& x) const {
    std::map<int, AlgebraElement> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        auto [it, fresh] = out.try_emplace(degrees_[i], zero());
        it->second[i] = x[i];
    }
    return out;
}

AlgebraElement OracleAlgebra::random_element(std::mt19937_64& rng) const {
    auto x = zero();
    for (auto& s : x) s = static_cast<Scalar>(rng() % field_.modulus());
    return x;
}

void OracleAlgebra::verify_relations() const {
    auto fail = [](const std::string& what) { throw OracleError("relation check failed: " + what); };
    const auto& g = graph_;
    for (auto u : g.vertices()) {
        auto pu = vertex_image(u);
        for (auto w : g.vertices()) {
            auto prod = multiply(pu, vertex_image(w));
            if (u == w ? prod != pu : !is_zero(prod))
                fail("vertices " + g.vertex_name(u) + ", " + g.vertex_name(w) +
                     " are not orthogonal idempotents");
        }
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto e = static_cast<EdgeId>(i);
        const auto& edge = g.edge(e);
        auto x = edge_image(e), xs = ghost_image(e);
        auto src = vertex_image(edge.source), rng = vertex_image(edge.range);
        if (multiply(src, x) != x || multiply(x, rng) != x) fail("s(e)e = e r(e) = e for " + edge.name);
        if (multiply(rng, xs) != xs || multiply(xs, src) != xs)
            fail("r(e)e* = e* s(e) = e* for " + edge.name);
        for (std::size_t j = 0; j < g.edge_count(); ++j) {
            auto prod = multiply(xs, edge_image(EdgeId(j)));
            if (i == j ? prod != rng : !is_zero(prod)) fail("e*f = delta r(e) for " + edge.name);
        }
    }
    for (auto v : g.vertices()) {
        if (g.is_sink(v)) continue;
        auto sum = zero();
        for (auto e : g.out_edges(v)) sum = add(sum, multiply(edge_image(e), ghost_image(e)));
        if (sum != vertex_image(v)) fail("v = sum ee* at " + g.vertex_name(v));
    }
}

// ---------------------------------------------------------------- subspaces

RowSpace span_of(const OracleAlgebra& a, const std::vector<AlgebraElement>& elements) {
    RowSpace s(a.field(), a.dimension());
    for (const auto& x : elements) s.insert(x);
    return s;
}

bool is_two_sided_ideal(const OracleAlgebra& a, const RowSpace& s) {
    for (const auto& row : s.rows()) {
        for (std::size_t i = 0; i < a.dimension(); ++i) {
            if (!s.contains(a.multiply_basis_left(i, row))) return false;
            if (!s.contains(a.multiply_basis_right(row, i))) return false;
        }
    }
    return true;
}

IdealSubspace ideal_generated_by(const OracleAlgebra& a, const std::vector<AlgebraElement>& gens) {
    RowSpace s(a.field(), a.dimension());
    std::deque<AlgebraElement> pending;
    for (const auto& x : gens)
        if (s.insert(x)) pending.push_back(x);
    while (!pending.empty()) {
        auto w = std::move(pending.front());
        pending.pop_front();
        for (std::size_t i = 0; i < a.dimension(); ++i) {
            if (s.rank() == a.dimension()) break;
            auto l = a.multiply_basis_left(i, w);
            if (s.insert(l)) pending.push_back(std::move(l));
            auto r = a.multiply_basis_right(w, i);
            if (s.insert(r)) pending.push_back(std::move(r));
        }
    }
    return IdealSubspace(std::move(s));
}

IdealSubspace perp_subspace(const OracleAlgebra& a, const IdealSubspace& ideal) {
    // x = sum_j x_j e_j. x b = sum_j x_j (e_j b) and b x = sum_j x_j (b e_j),
    // so each output coordinate of those products is one linear constraint.
    const auto dim = a.dimension();
    RowSpace constraints(a.field(), dim);
    std::vector<AlgebraElement> columns(dim);
    auto absorb = [&] {
        for (std::size_t t = 0; t < dim && constraints.rank() < dim; ++t) {
            Vector row(dim, 0);
            bool any = false;
            for (std::size_t j = 0; j < dim; ++j) {
                row[j] = columns[j][t];
                any = any || row[j];
            }
            if (any) constraints.insert(std::move(row));
        }
    };
    for (const auto& b : ideal.space().rows()) {
        if (constraints.rank() == dim) break;
        for (std::size_t j = 0; j < dim; ++j) columns[j] = a.multiply_basis_left(j, b);
        absorb();
        for (std::size_t j = 0; j < dim; ++j) columns[j] = a.multiply_basis_right(b, j);
        absorb();
    }
    auto result = span_of(a, constraints.null_space());
    if (!is_two_sided_ideal(a, result)) throw OracleError("annihilator failed the ideal check");
    return IdealSubspace(std::move(result));
}

VertexSet vertex_set_of(const OracleAlgebra& a, const IdealSubspace& i) {
    VertexSet out(a.graph());
    for (auto v : a.graph().vertices())
        if (i.contains(a.vertex_image(v))) out.insert(v);
    return out;
}

bool is_graded_subspace(const OracleAlgebra& a, const RowSpace& s) {
    for (const auto& row : s.rows())
        for (const auto& [deg, part] : a.homogeneous_components(row))
            if (!s.contains(part)) return false;
    return true;
}

std::vector<AlgebraElement> vertex_images(const OracleAlgebra& a, const VertexSet& s) {
    std::vector<AlgebraElement> out;
    for (auto v : s.members()) out.push_back(a.vertex_image(v));
    return out;
}

}  // namespace lpa

#pragma once

// Brute-force model of the Leavitt path algebra of a finite acyclic graph over
// GF(p). For such graphs the algebra is a direct sum, over the sinks v, of
// full matrix algebras of size n_v = #{paths ending at v}. The basis element
// e[v; a, b] is the matrix unit at (a, b) in block v, i.e. the monomial a b*,
// of degree |a| - |b|. Everything here is plain linear algebra on that basis
// and is independent of the vertex-set calculus it is used to check.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/linear_algebra.hpp"

namespace lpa {

inline constexpr std::size_t kDefaultOracleDimensionCap = 2000;

using AlgebraElement = Vector;

struct BasisLabel {
    VertexId sink;
    std::size_t row_path;  // index into paths_into(sink)
    std::size_t col_path;
};

class OracleAlgebra {
public:
    // Throws OracleError if g has a cycle or the generator images violate a
    // defining relation, CutoffExceeded if the dimension exceeds `cap`, and
    // std::invalid_argument if p is not prime.
    static OracleAlgebra build(const Graph& g, std::uint32_t p,
                               std::size_t cap = kDefaultOracleDimensionCap);

    const Graph& graph() const noexcept { return graph_; }
    const PrimeField& field() const noexcept { return field_; }
    std::size_t dimension() const noexcept { return labels_.size(); }

    std::span<const VertexId> sinks() const noexcept { return sinks_; }
    // Paths ending at `sink`, trivial path first.
    const std::vector<Path>& paths_into(VertexId sink) const;

    const BasisLabel& label(std::size_t i) const { return labels_.at(i); }
    std::string label_text(std::size_t i) const;
    int degree(std::size_t i) const { return degrees_.at(i); }
    std::size_t basis_index(VertexId sink, std::size_t row_path, std::size_t col_path) const;

    AlgebraElement zero() const { return AlgebraElement(dimension(), 0); }
    AlgebraElement basis_element(std::size_t i) const;
    AlgebraElement vertex_image(VertexId v) const;
    AlgebraElement edge_image(EdgeId e) const;
    AlgebraElement ghost_image(EdgeId e) const;
    AlgebraElement path_image(const Path& p) const;

    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
    // basis_element(i) * y and y * basis_element(i), without a full product.
    AlgebraElement multiply_basis_left(std::size_t i, const AlgebraElement& y) const;
    AlgebraElement multiply_basis_right(const AlgebraElement& y, std::size_t i) const;

    AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement scale(Scalar c, const AlgebraElement& x) const;

    // Components of x by degree; zero components are omitted.
    std::map<int, AlgebraElement> homogeneous_components(const AlgebraElement& x) const;

    AlgebraElement random_element(std::mt19937_64& rng) const;

private:
    OracleAlgebra(Graph g, PrimeField f) : graph_(std::move(g)), field_(f) {}
    void verify_relations() const;

    struct Block {
        std::size_t offset;
        std::size_t size;
    };

    Graph graph_;
    PrimeField field_;
    std::vector<VertexId> sinks_;
    std::map<VertexId, Block> blocks_;
    std::map<VertexId, std::vector<Path>> paths_;
    std::map<std::pair<VertexId, std::vector<EdgeId>>, std::size_t> path_index_;
    std::vector<BasisLabel> labels_;
    std::vector<int> degrees_;
};

// Linear span of a set of elements; no closure assumed.
RowSpace span_of(const OracleAlgebra& a, const std::vector<AlgebraElement>& elements);

// A subspace closed under multiplication by every basis element on both sides.
class IdealSubspace {
public:
    const RowSpace& space() const noexcept { return space_; }
    std::size_t dimension() const noexcept { return space_.rank(); }
    bool contains(const AlgebraElement& x) const { return space_.contains(x); }
    friend bool operator==(const IdealSubspace&, const IdealSubspace&) = default;

private:
    explicit IdealSubspace(RowSpace s) : space_(std::move(s)) {}
    friend IdealSubspace ideal_generated_by(const OracleAlgebra&, const std::vector<AlgebraElement>&);
    friend IdealSubspace perp_subspace(const OracleAlgebra&, const IdealSubspace&);

    RowSpace space_;
};

bool is_two_sided_ideal(const OracleAlgebra& a, const RowSpace& s);

// Fixed point of: multiply every new basis vector by every basis element on
// both sides, row-reduce, keep what is new.
IdealSubspace ideal_generated_by(const OracleAlgebra& a, const std::vector<AlgebraElement>& gens);

// Two-sided annihilator {x : x b = b x = 0 for all b in I}. Throws OracleError
// if the result fails the ideal check.
IdealSubspace perp_subspace(const OracleAlgebra& a, const IdealSubspace& i);

// H(I): vertices whose image lies in I.
VertexSet vertex_set_of(const OracleAlgebra& a, const IdealSubspace& i);

// Every degree component of every basis vector lies in the subspace.
bool is_graded_subspace(const OracleAlgebra& a, const RowSpace& s);

std::vector<AlgebraElement> vertex_images(const OracleAlgebra& a, const VertexSet& s);

}  // namespace lpa

#pragma once

// Property suites that cross-check the vertex-set calculus against itself and
// against the brute-force oracle, over seeded random and exhaustive graph
// families.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpa/graph.hpp"
#include "lpa/ideal_calculus.hpp"
#include "lpa/laurent.hpp"

namespace lpa {

// Computes the vertex set of the annihilator of a graded ideal. Replaceable so
// the runner can be pointed at a deliberately wrong implementation.
using PerpSetFn = std::function<VertexSet(const Graph&, const GradedIdeal&)>;

VertexSet calculus_perp_set(const Graph& g, const GradedIdeal& j);

struct VerifyOptions {
    std::size_t max_vertices = 5;
    std::size_t max_edges = 8;
    std::size_t trials = 500;
    std::uint64_t seed = 42;
    std::uint32_t prime = 2;
    // Random acyclic graphs whose oracle exceeds this are redrawn.
    std::size_t oracle_dimension_cap = 256;
    PerpSetFn perp_set = calculus_perp_set;
};

// Row identifiers, in matrix order.
namespace rows {
inline constexpr const char* perp_complement = "perp-complement";
inline constexpr const char* double_perp_trees = "double-perp-trees";
inline constexpr const char* regularity_criterion = "regularity-criterion";
inline constexpr const char* perp_is_regular = "perp-is-regular";
inline constexpr const char* perp_is_graded = "perp-is-graded";
inline constexpr const char* lattice_count = "lattice-count";
inline constexpr const char* cycle_bijection = "cycle-bijection";
inline constexpr const char* quotient_L_forces_cycles = "quotient-L-forces-cycles";
inline constexpr const char* regular_quotient_L_iff = "regular-quotient-L-iff";
inline constexpr const char* regular_preserves_L = "regular-preserves-L";
inline constexpr const char* maximal_dichotomy = "maximal-dichotomy";
inline constexpr const char* laurent_annihilator = "laurent-annihilator";
}  // namespace rows

struct VerificationRow {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::uint64_t seed = 0;
    // Minimized failing graph, when the property is about graphs.
    std::optional<Graph> counterexample;
    std::string note;
};

struct VerificationMatrix {
    std::vector<VerificationRow> rows;

    bool passed() const;
    const VerificationRow* find(std::string_view name) const;
};

VerificationMatrix run_verification(const VerifyOptions& options);

std::string matrix_to_text(const VerificationMatrix& m);
nlohmann::json matrix_to_json(const VerificationMatrix& m);

// ---------------------------------------------------------------- families

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// Vertices v0..v{n-1}, edges e0..e{m-1}; n in [1, max_vertices], m in
// [0, max_edges]. Acyclic graphs get no loops and only forward edges in a
// random vertex order.
Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges, bool acyclic);

// Every acyclic multigraph with at most the given sizes, one per isomorphism
// class, including the empty graph.
std::vector<Graph> enumerate_acyclic_graphs(std::size_t max_vertices, std::size_t max_edges);

// Greedily drops edges, then vertices, while `fails` keeps returning true.
Graph minimize_counterexample(Graph g, const std::function<bool(const Graph&)>& fails);

LaurentPolynomial random_laurent(std::mt19937_64& rng, PrimeField field, std::int64_t max_width);

// ---------------------------------------------------------------- properties
// Each returns true when the property holds on every hereditary saturated set
// of the graph.

struct OracleAgreement {
    bool perp_complement = true;
    bool double_perp_trees = true;
    bool regularity_criterion = true;
};

// Throws OracleError if g is not acyclic or is too large for the oracle.
OracleAgreement check_oracle_agreement(const Graph& g, std::uint32_t prime,
                                       const PerpSetFn& perp_set = calculus_perp_set,
                                       std::size_t dimension_cap = 2000);

// Annihilators of `ideals` ideals, each generated by 1-3 sparse random
// elements, are graded two-sided ideals.
bool check_random_perps_graded(const Graph& g, std::uint32_t prime, std::uint64_t seed, std::size_t ideals,
                               std::size_t dimension_cap = 2000);

// |hs sets| = #distinct oracle ideals generated by vertex subsets = 2^#sinks.
bool check_lattice_count(const Graph& g, std::uint32_t prime, std::size_t dimension_cap = 2000);

bool check_perp_is_regular(const Graph& g);
bool check_cycle_bijection(const Graph& g);
bool check_quotient_L_forces_cycles(const Graph& g);
bool check_regular_quotient_L_iff(const Graph& g);
bool check_regular_preserves_L(const Graph& g);
bool check_maximal_dichotomy(const Graph& g);

// A random nonzero Laurent polynomial passes the annihilator check and its
// product with a second random one has additive extreme degrees.
bool check_laurent_trial(std::mt19937_64& rng, PrimeField field, std::int64_t max_width = 7);

}  // namespace lpa

#pragma once

#include <cstddef>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

// Largest vertex count accepted by the exhaustive lattice enumeration.
inline constexpr std::size_t kEnumerationCutoff = 20;

bool is_hereditary(const Graph& g, const VertexSet& h);

// Sinks are exempt: only regular vertices are ever forced in.
bool is_saturated(const Graph& g, const VertexSet& h);

// A vertex set that is both hereditary and saturated. Construction validates.
class HereditarySaturatedSet {
public:
    // Throws std::invalid_argument if `members` fails either predicate.
    HereditarySaturatedSet(const Graph& g, VertexSet members);

    const VertexSet& members() const noexcept { return members_; }
    std::uint64_t graph_id() const noexcept { return members_.graph_id(); }

    friend bool operator==(const HereditarySaturatedSet&, const HereditarySaturatedSet&) = default;

private:
    struct Trusted {};
    HereditarySaturatedSet(Trusted, VertexSet members) : members_(std::move(members)) {}

    friend HereditarySaturatedSet hs_closure(const Graph&, const VertexSet&);
    friend HereditarySaturatedSet hs_meet(const Graph&, const HereditarySaturatedSet&,
                                          const HereditarySaturatedSet&);
    friend std::vector<HereditarySaturatedSet> enumerate_hs_sets(const Graph&);

    VertexSet members_;
};

// Least hereditary saturated superset. Alternates a forward-closure pass and
// a saturation pass until neither adds anything.
HereditarySaturatedSet hs_closure(const Graph& g, const VertexSet& x);

// Every hereditary saturated subset, sorted by size then member names.
// Throws CutoffExceeded above kEnumerationCutoff vertices.
std::vector<HereditarySaturatedSet> enumerate_hs_sets(const Graph& g);

// Throw GraphMismatch if the arguments come from different graphs.
HereditarySaturatedSet hs_meet(const Graph& g, const HereditarySaturatedSet& a,
                               const HereditarySaturatedSet& b);
HereditarySaturatedSet hs_join(const Graph& g, const HereditarySaturatedSet& a,
                               const HereditarySaturatedSet& b);

}  // namespace lpa

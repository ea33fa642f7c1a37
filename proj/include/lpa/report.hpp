#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpa/graph.hpp"
#include "lpa/hereditary.hpp"
#include "lpa/ideal_calculus.hpp"

namespace lpa {

nlohmann::json names_json(const Graph& g, const VertexSet& s);

nlohmann::json report_to_json(const Graph& g, const RegularityReport& r);
std::string report_to_text(const Graph& g, const RegularityReport& r);

struct LatticeEntry {
    HereditarySaturatedSet set;
    bool is_regular;
};

// All hereditary saturated sets with their regularity flag, in enumeration order.
std::vector<LatticeEntry> graded_ideal_lattice(const Graph& g);

nlohmann::json lattice_to_json(const Graph& g, const std::vector<LatticeEntry>& lattice);
std::string lattice_to_text(const Graph& g, const std::vector<LatticeEntry>& lattice);

// Hasse diagram: one node per set, an edge A -> B when A is covered by B.
std::string lattice_to_dot(const Graph& g, const std::vector<LatticeEntry>& lattice);

}  // namespace lpa

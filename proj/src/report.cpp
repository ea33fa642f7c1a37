#include "lpa/report.hpp"

#include <sstream>

#include "lpa/graph_io.hpp"

namespace lpa {

using nlohmann::json;

namespace {

std::string brace(const std::vector<std::string>& names) {
    std::string s = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += ", ";
        s += names[i];
    }
    return s + "}";
}

std::string brace(const Graph& g, const VertexSet& s) { return brace(sorted_names(g, s)); }

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

json names_json(const Graph& g, const VertexSet& s) { return sorted_names(g, s); }

json report_to_json(const Graph& g, const RegularityReport& r) {
    json out{
        {"generators", names_json(g, r.generators)},
        {"ideal", names_json(g, r.ideal.vertices())},
        {"bar_closure", names_json(g, r.bar_closure)},
        {"perp_set", names_json(g, r.perp_set)},
        {"double_perp_set", names_json(g, r.double_perp_set)},
        {"is_regular", r.is_regular},
        {"quotient", graph_to_json(r.quotient)},
        {"quotient_condition_L", r.quotient_condition_L},
        {"exit_free_cycle_vertices", names_json(g, r.exit_free_cycle_vertices)},
    };
    out["pc_bijection_holds"] = r.pc_bijection_holds ? json(*r.pc_bijection_holds) : json(nullptr);
    return out;
}

std::string report_to_text(const Graph& g, const RegularityReport& r) {
    std::ostringstream os;
    os << "generators:               " << brace(g, r.generators) << "\n"
       << "H (hereditary saturated): " << brace(g, r.ideal.vertices()) << "\n"
       << "H-bar:                    " << brace(g, r.bar_closure) << "\n"
       << "H(J perp):                " << brace(g, r.perp_set) << "\n"
       << "H(J perp perp):           " << brace(g, r.double_perp_set) << "\n"
       << "regular:                  " << (r.is_regular ? "yes" : "no") << "\n"
       << "exit-free cycle vertices: " << brace(g, r.exit_free_cycle_vertices) << "\n"
       << "quotient vertices:        " << brace(r.quotient, r.quotient.all_vertices()) << "\n"
       << "quotient edges:          ";
    if (r.quotient.edge_count() == 0) os << " (none)";
    for (const auto& e : r.quotient.edges())
        os << " " << e.name << ":" << r.quotient.vertex_name(e.source) << "->"
           << r.quotient.vertex_name(e.range);
    os << "\n"
       << "quotient condition (L):   " << (r.quotient_condition_L ? "yes" : "no") << "\n"
       << "cycle-vertex bijection:   "
       << (r.pc_bijection_holds ? (*r.pc_bijection_holds ? "yes" : "no") : "n/a") << "\n";
    return os.str();
}

std::vector<LatticeEntry> graded_ideal_lattice(const Graph& g) {
    std::vector<LatticeEntry> out;
    for (auto& h : enumerate_hs_sets(g)) {
        bool regular = is_regular(g, GradedIdeal(h));
        out.push_back({std::move(h), regular});
    }
    return out;
}

json lattice_to_json(const Graph& g, const std::vector<LatticeEntry>& lattice) {
    json sets = json::array();
    for (const auto& e : lattice)
        sets.push_back({{"vertices", names_json(g, e.set.members())}, {"is_regular", e.is_regular}});
    return json{{"count", lattice.size()}, {"sets", std::move(sets)}};
}

std::string lattice_to_text(const Graph& g, const std::vector<LatticeEntry>& lattice) {
    std::ostringstream os;
    os << lattice.size() << " hereditary saturated set" << (lattice.size() == 1 ? "" : "s") << "\n";
    for (const auto& e : lattice)
        os << "  " << brace(g, e.set.members()) << (e.is_regular ? "  regular" : "  not regular") << "\n";
    return os.str();
}

std::string lattice_to_dot(const Graph& g, const std::vector<LatticeEntry>& lattice) {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const auto& e = lattice[i];
        os << "  n" << i << " [label=\"" << dot_escape(brace(g, e.set.members())) << "\""
           << (e.is_regular ? ", peripheries=2" : ", style=dashed") << "];\n";
    }
    for (std::size_t a = 0; a < lattice.size(); ++a) {
        const auto& lo = lattice[a].set.members();
        for (std::size_t b = 0; b < lattice.size(); ++b) {
            const auto& hi = lattice[b].set.members();
            if (a == b || !lo.is_subset_of(hi) || lo == hi) continue;
            bool covered = true;
            for (std::size_t c = 0; c < lattice.size() && covered; ++c) {
                const auto& mid = lattice[c].set.members();
                if (mid != lo && mid != hi && lo.is_subset_of(mid) && mid.is_subset_of(hi)) covered = false;
            }
            if (covered) os << "  n" << a << " -> n" << b << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace lpa

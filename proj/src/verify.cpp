#include "lpa/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "lpa/error.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/hereditary.hpp"
#include "lpa/oracle.hpp"

namespace lpa {

VertexSet calculus_perp_set(const Graph& g, const GradedIdeal& j) { return perp(g, j).vertices(); }

bool VerificationMatrix::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.failures == 0; });
}

const VerificationRow* VerificationMatrix::find(std::string_view name) const {
    for (const auto& r : rows)
        if (r.name == name) return &r;
    return nullptr;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// ---------------------------------------------------------------- families

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return bound == 0 ? 0 : rng() % bound; }

std::string vertex_label(std::size_t i) { return "v" + std::to_string(i); }
std::string edge_label(std::size_t i) { return "e" + std::to_string(i); }

Graph graph_from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(vertex_label(i));
    std::vector<EdgeSpec> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        edges.push_back({edge_label(k), vertex_label(pairs[k].first), vertex_label(pairs[k].second)});
    return Graph::from_spec(std::move(names), edges);
}

}  // namespace

Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges, bool acyclic) {
    const std::size_t n = 1 + draw(rng, std::max<std::size_t>(max_vertices, 1));
    std::size_t m = draw(rng, max_edges + 1);
    if (acyclic && n < 2) m = 0;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[draw(rng, i)]);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < m; ++k) {
        if (acyclic) {
            auto a = draw(rng, n), b = draw(rng, n - 1);
            if (b >= a) ++b;
            if (a > b) std::swap(a, b);
            pairs.emplace_back(order[a], order[b]);
        } else {
            pairs.emplace_back(draw(rng, n), draw(rng, n));
        }
    }
    return graph_from_pairs(n, pairs);
}

std::vector<Graph> enumerate_acyclic_graphs(std::size_t max_vertices, std::size_t max_edges) {
    using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
    std::vector<Graph> out;
    for (std::size_t n = 0; n <= max_vertices; ++n) {
        Pairs slots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) slots.emplace_back(i, j);
        std::set<Pairs> seen;
        std::vector<std::size_t> perm(n);
        auto canonical = [&](const Pairs& pairs) {
            std::iota(perm.begin(), perm.end(), 0);
            Pairs best;
            bool first = true;
            do {
                Pairs mapped;
                for (auto [a, b] : pairs) mapped.emplace_back(perm[a], perm[b]);
                std::sort(mapped.begin(), mapped.end());
                if (first || mapped < best) best = std::move(mapped);
                first = false;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return best;
        };
        // Multisets of slots as nondecreasing index sequences.
        std::vector<std::size_t> choice;
        auto visit = [&](auto&& self, std::size_t from) -> void {
            Pairs pairs;
            for (auto c : choice) pairs.push_back(slots[c]);
            auto g = graph_from_pairs(n, pairs);
            if (!is_acyclic(g)) return;  // supersets stay cyclic
            seen.insert(canonical(pairs));
            if (choice.size() == max_edges) return;
            for (std::size_t c = from; c < slots.size(); ++c) {
                choice.push_back(c);
                self(self, c);
                choice.pop_back();
            }
        };
        visit(visit, 0);
        for (const auto& pairs : seen) out.push_back(graph_from_pairs(n, pairs));
    }
    return out;
}

Graph minimize_counterexample(Graph g, const std::function<bool(const Graph&)>& fails) {
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (std::size_t i = g.edge_count(); i-- > 0;) {
            auto specs = g.edge_specs();
            specs.erase(specs.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<std::string> names(g.vertex_names().begin(), g.vertex_names().end());
            auto smaller = Graph::from_spec(std::move(names), specs);
            if (fails(smaller)) {
                g = std::move(smaller);
                shrunk = true;
            }
        }
        for (std::size_t i = g.vertex_count(); i-- > 0;) {
            VertexSet drop(g);
            drop.insert(VertexId(i));
            auto smaller = remove_vertices(g, drop);
            if (fails(smaller)) {
                g = std::move(smaller);
                shrunk = true;
            }
        }
    }
    return g;
}

LaurentPolynomial random_laurent(std::mt19937_64& rng, PrimeField field, std::int64_t max_width) {
    const auto p = field.modulus();
    const auto low = static_cast<std::int64_t>(draw(rng, 11)) - 5;
    const auto width = 1 + static_cast<std::int64_t>(draw(rng, static_cast<std::size_t>(max_width)));
    LaurentPolynomial f(field);
    for (std::int64_t d = low; d < low + width; ++d) {
        bool end = d == low || d == low + width - 1;
        auto c = end ? static_cast<Scalar>(1 + draw(rng, p - 1)) : static_cast<Scalar>(draw(rng, p));
        f.add_term(d, c);
    }
    return f;
}

// ---------------------------------------------------------------- properties

OracleAgreement check_oracle_agreement(const Graph& g, std::uint32_t prime, const PerpSetFn& perp_set,
                                       std::size_t dimension_cap) {
    auto a = OracleAlgebra::build(g, prime, dimension_cap);
    OracleAgreement out;
    for (const auto& h : enumerate_hs_sets(g)) {
        GradedIdeal j(h);
        auto ideal = ideal_generated_by(a, vertex_images(a, h.members()));
        auto p = perp_subspace(a, ideal);
        auto pp = perp_subspace(a, p);
        if (vertex_set_of(a, p) != perp_set(g, j)) out.perp_complement = false;
        if (vertex_set_of(a, pp) != double_perp(g, j).vertices()) out.double_perp_trees = false;
        if ((pp == ideal) != is_regular(g, j)) out.regularity_criterion = false;
    }
    return out;
}

namespace {

AlgebraElement sparse_random_element(const OracleAlgebra& a, std::mt19937_64& rng) {
    auto x = a.zero();
    if (a.dimension() == 0) return x;
    const auto p = a.field().modulus();
    const auto terms = 1 + draw(rng, 3);
    for (std::size_t t = 0; t < terms; ++t) {
        auto i = draw(rng, a.dimension());
        x[i] = a.field().add(x[i], static_cast<Scalar>(1 + draw(rng, p - 1)));
    }
    return x;
}

}  // namespace

bool check_random_perps_graded(const Graph& g, std::uint32_t prime, std::uint64_t seed, std::size_t ideals,
                               std::size_t dimension_cap) {
    auto a = OracleAlgebra::build(g, prime, dimension_cap);
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < ideals; ++k) {
        std::vector<AlgebraElement> gens;
        const auto count = 1 + draw(rng, 3);
        for (std::size_t i = 0; i < count; ++i) gens.push_back(sparse_random_element(a, rng));
        auto p = perp_subspace(a, ideal_generated_by(a, gens));
        if (!is_graded_subspace(a, p.space())) return false;
    }
    return true;
}

bool check_lattice_count(const Graph& g, std::uint32_t prime, std::size_t dimension_cap) {
    auto a = OracleAlgebra::build(g, prime, dimension_cap);
    const auto n = g.vertex_count();
    if (n > kEnumerationCutoff) throw CutoffExceeded("lattice count needs at most 20 vertices");
    std::vector<IdealSubspace> distinct;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet x(g);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1U) x.insert(VertexId(i));
        auto ideal = ideal_generated_by(a, vertex_images(a, x));
        // H(I) must be hereditary saturated and regenerate I.
        auto h = vertex_set_of(a, ideal);
        if (!is_hereditary(g, h) || !is_saturated(g, h)) return false;
        if (h != hs_closure(g, x).members()) return false;
        if (ideal_generated_by(a, vertex_images(a, h)) != ideal) return false;
        if (std::find(distinct.begin(), distinct.end(), ideal) == distinct.end()) distinct.push_back(ideal);
    }
    const auto hs_count = enumerate_hs_sets(g).size();
    const auto expected = std::size_t{1} << a.sinks().size();
    return hs_count == distinct.size() && hs_count == expected;
}

namespace {

template <typename Pred>
bool for_every_hs(const Graph& g, Pred pred) {
    for (const auto& h : enumerate_hs_sets(g))
        if (!pred(h)) return false;
    return true;
}

}  // namespace

bool check_perp_is_regular(const Graph& g) {
    return for_every_hs(g, [&](const HereditarySaturatedSet& h) {
        GradedIdeal j(h);
        auto p = perp(g, j);
        auto ppp = perp(g, perp(g, p));
        auto dp = double_perp(g, j).vertices();
        return is_regular(g, p) && p == ppp && h.members().is_subset_of(dp) &&
               dp.is_subset_of(bar_closure(g, j));
    });
}

bool check_cycle_bijection(const Graph& g) {
    return for_every_hs(g, [&](const HereditarySaturatedSet& h) {
        return !is_regular(g, GradedIdeal(h)) || pc_bijection_check(g, h);
    });
}

bool check_quotient_L_forces_cycles(const Graph& g) {
    const auto pc = exit_free_cycle_vertices(g);
    return for_every_hs(g, [&](const HereditarySaturatedSet& h) {
        return !condition_L(quotient_graph(g, h)) || pc.is_subset_of(h.members());
    });
}

bool check_regular_quotient_L_iff(const Graph& g) {
    const auto pc = exit_free_cycle_vertices(g);
    return for_every_hs(g, [&](const HereditarySaturatedSet& h) {
        if (!is_regular(g, GradedIdeal(h))) return true;
        return condition_L(quotient_graph(g, h)) == pc.is_subset_of(h.members());
    });
}

bool check_regular_preserves_L(const Graph& g) {
    if (!condition_L(g)) return true;
    return for_every_hs(g, [&](const HereditarySaturatedSet& h) {
        return !is_regular(g, GradedIdeal(h)) || condition_L(quotient_graph(g, h));
    });
}

bool check_maximal_dichotomy(const Graph& g) {
    std::vector<MaximalIdeal> maximal;
    try {
        maximal = maximal_graded_ideals(g);
    } catch (const InvariantViolation&) {
        return false;
    }
    for (const auto& m : maximal) {
        bool regular = is_regular(g, m.ideal);
        bool perp_zero = perp(g, m.ideal).vertices().empty();
        if (!regular && !perp_zero) return false;
        auto expected = regular && perp_zero ? MaximalKind::both
                        : regular           ? MaximalKind::regular
                                            : MaximalKind::perp_zero;
        if (m.kind != expected) return false;
    }
    return true;
}

bool check_laurent_trial(std::mt19937_64& rng, PrimeField field, std::int64_t max_width) {
    auto f = random_laurent(rng, field, max_width);
    auto h = random_laurent(rng, field, max_width);
    if (!laurent_perp_is_zero(f)) return false;
    auto fh = laurent_mul(f, h);
    return !fh.is_zero() && fh.min_degree() == f.min_degree() + h.min_degree() &&
           fh.max_degree() == f.max_degree() + h.max_degree();
}

// ---------------------------------------------------------------- runner

namespace {

using GraphCheck = std::function<bool(const Graph&)>;

// Wraps a property so that exceptions count as failures.
GraphCheck failing(GraphCheck holds) {
    return [holds = std::move(holds)](const Graph& g) {
        try {
            return !holds(g);
        } catch (const std::exception&) {
            return true;
        }
    };
}

void record(VerificationRow& row, bool ok, const Graph& g, const GraphCheck& holds) {
    ++row.trials;
    if (ok) return;
    ++row.failures;
    if (!row.counterexample) row.counterexample = minimize_counterexample(g, failing(holds));
}

}  // namespace

VerificationMatrix run_verification(const VerifyOptions& options) {
    VerificationMatrix m;
    if (options.trials == 0) return m;
    const PrimeField field(options.prime);
    const auto acyclic_seed = mix_seed(options.seed, 1);
    const auto general_seed = mix_seed(options.seed, 2);
    const auto laurent_seed = mix_seed(options.seed, 3);

    auto add_row = [&](const char* name, std::uint64_t seed) -> VerificationRow& {
        m.rows.push_back(VerificationRow{name, 0, 0, seed, std::nullopt, {}});
        return m.rows.back();
    };
    m.rows.reserve(12);
    auto& perp_row = add_row(rows::perp_complement, acyclic_seed);
    auto& dperp_row = add_row(rows::double_perp_trees, acyclic_seed);
    auto& regular_row = add_row(rows::regularity_criterion, acyclic_seed);
    auto& perp_regular_row = add_row(rows::perp_is_regular, general_seed);
    auto& graded_row = add_row(rows::perp_is_graded, acyclic_seed);
    auto& count_row = add_row(rows::lattice_count, acyclic_seed);
    auto& bijection_row = add_row(rows::cycle_bijection, general_seed);
    auto& forces_row = add_row(rows::quotient_L_forces_cycles, general_seed);
    auto& iff_row = add_row(rows::regular_quotient_L_iff, general_seed);
    auto& preserves_row = add_row(rows::regular_preserves_L, general_seed);
    auto& maximal_row = add_row(rows::maximal_dichotomy, general_seed);
    auto& laurent_row = add_row(rows::laurent_annihilator, laurent_seed);

    const auto p = options.prime;
    const auto cap = options.oracle_dimension_cap;
    for (std::size_t t = 0; t < options.trials; ++t) {
        std::mt19937_64 rng(mix_seed(acyclic_seed, t));
        Graph g;
        for (int attempt = 0;; ++attempt) {
            g = random_graph(rng, options.max_vertices, options.max_edges, true);
            try {
                OracleAlgebra::build(g, p, cap);
                break;
            } catch (const CutoffExceeded&) {
                if (attempt > 1000) throw;
            }
        }
        const auto ideal_seed = rng();

        auto agreement_row = [&](bool OracleAgreement::*field_ptr) -> GraphCheck {
            return [&, field_ptr](const Graph& x) {
                return check_oracle_agreement(x, p, options.perp_set, cap).*field_ptr;
            };
        };
        const auto agreement = [&] {
            try {
                return check_oracle_agreement(g, p, options.perp_set, cap);
            } catch (const std::exception&) {
                return OracleAgreement{false, false, false};
            }
        }();
        record(perp_row, agreement.perp_complement, g, agreement_row(&OracleAgreement::perp_complement));
        record(dperp_row, agreement.double_perp_trees, g, agreement_row(&OracleAgreement::double_perp_trees));
        record(regular_row, agreement.regularity_criterion, g,
               agreement_row(&OracleAgreement::regularity_criterion));

        GraphCheck graded = [&, ideal_seed](const Graph& x) {
            return check_random_perps_graded(x, p, ideal_seed, 1, cap);
        };
        record(graded_row, !failing(graded)(g), g, graded);
        GraphCheck count = [&](const Graph& x) { return check_lattice_count(x, p, cap); };
        record(count_row, !failing(count)(g), g, count);
    }

    const std::vector<std::pair<VerificationRow*, GraphCheck>> general_checks = {
        {&perp_regular_row, check_perp_is_regular},
        {&bijection_row, check_cycle_bijection},
        {&forces_row, check_quotient_L_forces_cycles},
        {&iff_row, check_regular_quotient_L_iff},
        {&preserves_row, check_regular_preserves_L},
        {&maximal_row, check_maximal_dichotomy},
    };
    for (std::size_t t = 0; t < options.trials; ++t) {
        std::mt19937_64 rng(mix_seed(general_seed, t));
        auto g = random_graph(rng, options.max_vertices, options.max_edges, false);
        for (const auto& [row, check] : general_checks) record(*row, !failing(check)(g), g, check);
    }

    for (std::size_t t = 0; t < options.trials; ++t) {
        std::mt19937_64 rng(mix_seed(laurent_seed, t));
        ++laurent_row.trials;
        auto probe = rng;
        if (!check_laurent_trial(rng, field)) {
            ++laurent_row.failures;
            if (laurent_row.note.empty())
                laurent_row.note = "failing polynomial: " + random_laurent(probe, field, 7).to_string();
        }
    }
    return m;
}

std::string matrix_to_text(const VerificationMatrix& m) {
    std::ostringstream os;
    os << std::left << std::setw(26) << "property" << std::right << std::setw(8) << "trials" << std::setw(10)
       << "failures" << "  seed\n";
    std::size_t failures = 0;
    for (const auto& r : m.rows) {
        failures += r.failures;
        os << std::left << std::setw(26) << r.name << std::right << std::setw(8) << r.trials << std::setw(10)
           << r.failures << "  " << r.seed << "  " << (r.failures == 0 ? "pass" : "FAIL") << "\n";
    }
    os << (m.passed() ? "PASS" : "FAIL") << ": " << m.rows.size() << " properties, " << failures
       << " failures\n";
    for (const auto& r : m.rows) {
        if (!r.note.empty()) os << r.name << ": " << r.note << "\n";
        if (r.counterexample)
            os << "counterexample for " << r.name << ":\n" << serialize_graph_document(*r.counterexample);
    }
    return os.str();
}

nlohmann::json matrix_to_json(const VerificationMatrix& m) {
    auto rows_json = nlohmann::json::array();
    for (const auto& r : m.rows) {
        nlohmann::json row{{"name", r.name}, {"trials", r.trials}, {"failures", r.failures}, {"seed", r.seed}};
        row["counterexample"] = r.counterexample ? graph_to_json(*r.counterexample) : nlohmann::json(nullptr);
        if (!r.note.empty()) row["note"] = r.note;
        rows_json.push_back(std::move(row));
    }
    return nlohmann::json{{"passed", m.passed()}, {"rows", std::move(rows_json)}};
}

}  // namespace lpa

#include "lpa/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace lpa {

LaurentPolynomial LaurentPolynomial::monomial(PrimeField field, std::int64_t degree, Scalar coefficient) {
    LaurentPolynomial p(field);
    p.add_term(degree, coefficient % field.modulus());
    return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(PrimeField field,
                                                const std::map<std::int64_t, std::int64_t>& terms) {
    LaurentPolynomial p(field);
    for (const auto& [d, c] : terms) p.add_term(d, field.reduce(c));
    return p;
}

Scalar LaurentPolynomial::coefficient(std::int64_t degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentPolynomial::min_degree() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no degree");
    return terms_.begin()->first;
}

std::int64_t LaurentPolynomial::max_degree() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no degree");
    return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(std::int64_t degree, Scalar coefficient) {
    auto sum = field_.add(this->coefficient(degree), coefficient % field_.modulus());
    if (sum == 0)
        terms_.erase(degree);
    else
        terms_[degree] = sum;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("polynomials over different fields");
    auto out = a;
    for (const auto& [d, c] : b.terms_) out.add_term(d, c);
    return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("polynomials over different fields");
    LaurentPolynomial out(a.field_);
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) out.add_term(da + db, a.field_.mul(ca, cb));
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (d == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "x";
        if (d != 1) os << "^" << d;
    }
    return os.str();
}

LaurentPolynomial laurent_mul(const LaurentPolynomial& f, const LaurentPolynomial& g) { return f * g; }

LaurentPerpReport laurent_perp_check(const LaurentPolynomial& f, std::int64_t window) {
    if (f.is_zero()) throw std::invalid_argument("annihilator check needs a nonzero polynomial");
    LaurentPerpReport report;
    report.window_low = -window;
    report.window_high = window;
    report.perp_is_zero = true;
    report.degree_additive = true;

    auto probe = [&](const LaurentPolynomial& g) {
        ++report.products_checked;
        auto fg = f * g;
        auto gf = g * f;
        if (fg.is_zero() || gf.is_zero()) {
            report.perp_is_zero = false;
            report.degree_additive = false;
            return;
        }
        if (fg.min_degree() != f.min_degree() + g.min_degree() ||
            fg.max_degree() != f.max_degree() + g.max_degree())
            report.degree_additive = false;
    };
    for (auto i = -window; i <= window; ++i) {
        probe(LaurentPolynomial::monomial(f.field(), i));
        for (auto j = i + 1; j <= window; ++j)
            probe(LaurentPolynomial::monomial(f.field(), i) + LaurentPolynomial::monomial(f.field(), j));
    }
    return report;
}

bool laurent_perp_is_zero(const LaurentPolynomial& f, std::int64_t window) {
    auto r = laurent_perp_check(f, window);
    return r.perp_is_zero && r.degree_additive;
}

}  // namespace lpa

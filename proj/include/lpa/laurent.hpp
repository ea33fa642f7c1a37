#pragma once

// Sparse Laurent polynomials over GF(p). The single-loop graph has
// K[x, x^-1] as its Leavitt path algebra, with the loop as x and its ghost as
// x^-1, and the degree of x^k is k.

#include <cstdint>
#include <map>
#include <string>

#include "lpa/linear_algebra.hpp"

namespace lpa {

class LaurentPolynomial {
public:
    explicit LaurentPolynomial(PrimeField field) : field_(field) {}

    static LaurentPolynomial monomial(PrimeField field, std::int64_t degree, Scalar coefficient = 1);
    static LaurentPolynomial from_terms(PrimeField field, const std::map<std::int64_t, std::int64_t>& terms);

    const PrimeField& field() const noexcept { return field_; }
    // Only nonzero coefficients are stored.
    const std::map<std::int64_t, Scalar>& terms() const noexcept { return terms_; }
    Scalar coefficient(std::int64_t degree) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    // Precondition: nonzero.
    std::int64_t min_degree() const;
    std::int64_t max_degree() const;

    void add_term(std::int64_t degree, Scalar coefficient);

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    std::string to_string() const;

private:
    PrimeField field_;
    std::map<std::int64_t, Scalar> terms_;
};

LaurentPolynomial laurent_mul(const LaurentPolynomial& f, const LaurentPolynomial& g);

struct LaurentPerpReport {
    // f*g != 0 for every test element g.
    bool perp_is_zero = false;
    // min/max degree of each product equal the sums of the factors'.
    bool degree_additive = false;
    std::int64_t window_low = 0;
    std::int64_t window_high = 0;
    std::size_t products_checked = 0;
};

inline constexpr std::int64_t kDefaultLaurentWindow = 6;

// Multiplies f by every monomial x^k and every binomial x^i + x^j with
// degrees in [-window, window]. Degree additivity of each product is what
// makes the finite window conclusive: a nonzero product of nonzero factors
// means nothing in that direction annihilates f. Throws
// std::invalid_argument if f is zero.
LaurentPerpReport laurent_perp_check(const LaurentPolynomial& f,
                                     std::int64_t window = kDefaultLaurentWindow);

bool laurent_perp_is_zero(const LaurentPolynomial& f, std::int64_t window = kDefaultLaurentWindow);

}  // namespace lpa

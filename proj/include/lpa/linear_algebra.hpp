#pragma once

// Dense exact linear algebra over a prime field GF(p).

#include <cstdint>
#include <span>
#include <vector>

namespace lpa {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

bool is_prime(std::uint64_t n) noexcept;

class PrimeField {
public:
    // Throws std::invalid_argument unless p is a prime below 2^31.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    Scalar reduce(std::int64_t x) const noexcept {
        auto r = x % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const noexcept {
        auto s = static_cast<std::uint64_t>(a) + b;
        return static_cast<Scalar>(s >= p_ ? s - p_ : s);
    }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept {
        return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
    }
    // Throws std::domain_error on zero.
    Scalar inv(Scalar a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

// y += c * x
void axpy(const PrimeField& f, Scalar c, std::span<const Scalar> x, std::span<Scalar> y);

bool is_zero(std::span<const Scalar> v) noexcept;

// Subspace of GF(p)^n kept in reduced row echelon form, rows ordered by pivot.
// Because every row is zero in every other row's pivot column, a vector is
// reduced by looking only at its own entries in pivot columns.
class RowSpace {
public:
    RowSpace(PrimeField field, std::size_t dimension);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t ambient_dimension() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const { return is_zero(reduce(v)); }
    // Returns true if v was independent of the current rows.
    bool insert(Vector v);

    // Basis of {x : r . x = 0 for every row r}.
    std::vector<Vector> null_space() const;

    bool is_subspace_of(const RowSpace& other) const;
    friend bool operator==(const RowSpace& a, const RowSpace& b) {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    PrimeField field_;
    std::size_t dim_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    // pivot_row_[c] = row index + 1 when column c is a pivot, else 0.
    std::vector<std::size_t> pivot_row_;
};

}  // namespace lpa

#include "lpa/linear_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("field modulus must be a prime below 2^31, got " + std::to_string(p));
}

Scalar PrimeField::inv(Scalar a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Scalar>(result);
}

void axpy(const PrimeField& f, Scalar c, std::span<const Scalar> x, std::span<Scalar> y) {
    if (c == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) y[i] = f.add(y[i], f.mul(c, x[i]));
}

bool is_zero(std::span<const Scalar> v) noexcept {
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

RowSpace::RowSpace(PrimeField field, std::size_t dimension)
    : field_(field), dim_(dimension), pivot_row_(dimension, 0) {}

Vector RowSpace::reduce(Vector v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length does not match ambient dimension");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto c = v[pivots_[r]];
        if (c) axpy(field_, field_.neg(c), rows_[r], v);
    }
    return v;
}

bool RowSpace::insert(Vector v) {
    v = reduce(std::move(v));
    auto lead = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
    if (lead == v.end()) return false;
    const auto pivot = static_cast<std::size_t>(lead - v.begin());
    auto scale = field_.inv(*lead);
    for (auto& s : v) s = field_.mul(s, scale);
    for (auto& row : rows_) {
        auto c = row[pivot];
        if (c) axpy(field_, field_.neg(c), v, row);
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + at, pivot);
    rows_.insert(rows_.begin() + at, std::move(v));
    std::fill(pivot_row_.begin(), pivot_row_.end(), 0);
    for (std::size_t r = 0; r < pivots_.size(); ++r) pivot_row_[pivots_[r]] = r + 1;
    return true;
}

std::vector<Vector> RowSpace::null_space() const {
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < dim_; ++free) {
        if (pivot_row_[free]) continue;
        Vector x(dim_, 0);
        x[free] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            x[pivots_[r]] = field_.neg(rows_[r][free]);
        basis.push_back(std::move(x));
    }
    return basis;
}

bool RowSpace::is_subspace_of(const RowSpace& other) const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const Vector& r) { return other.contains(r); });
}

}  // namespace lpa

#include <doctest.h>

#include <random>

#include <stdexcept>

#include "lpa/linear_algebra.hpp"

using namespace lpa;

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(91));
    CHECK(is_prime(2147483647ULL));
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_NOTHROW(PrimeField(2147483647U));
}

TEST_CASE("field arithmetic") {
    PrimeField f(5);
    CHECK(f.add(3, 4) == 2);
    CHECK(f.sub(1, 3) == 3);
    CHECK(f.neg(2) == 3);
    CHECK(f.neg(0) == 0);
    CHECK(f.mul(3, 4) == 2);
    CHECK(f.reduce(-7) == 3);
    for (Scalar a = 1; a < 5; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);

    PrimeField big(2147483647U);
    Scalar x = 2147483646U;
    CHECK(big.mul(x, x) == 1);
    CHECK(big.add(x, x) == 2147483645U);
}

TEST_CASE("row space basics") {
    PrimeField f(3);
    RowSpace s(f, 3);
    CHECK(s.insert({1, 2, 0}));
    CHECK(s.insert({0, 1, 1}));
    CHECK_FALSE(s.insert({1, 0, 1}));  // sum of the first two
    CHECK(s.rank() == 2);
    CHECK(s.contains({2, 1, 0}));
    CHECK_FALSE(s.contains({0, 0, 1}));
    CHECK_FALSE(s.insert({0, 0, 0}));

    auto ns = s.null_space();
    REQUIRE(ns.size() == 1);
    for (const auto& r : s.rows()) {
        Scalar dot = 0;
        for (std::size_t i = 0; i < 3; ++i) dot = f.add(dot, f.mul(r[i], ns[0][i]));
        CHECK(dot == 0);
    }

    RowSpace t(f, 3);
    t.insert({2, 1, 0});
    CHECK(t.is_subspace_of(s));
    CHECK_FALSE(s.is_subspace_of(t));
    t.insert({1, 0, 1});
    CHECK(t == s);
}

TEST_CASE("row space rank and null space on random matrices") {
    std::mt19937_64 rng(5);
    for (std::uint32_t p : {2U, 3U, 7U}) {
        PrimeField f(p);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 1 + rng() % 8;
            const std::size_t m = rng() % 10;
            RowSpace s(f, n);
            std::vector<Vector> inserted;
            for (std::size_t i = 0; i < m; ++i) {
                Vector v(n);
                for (auto& x : v) x = static_cast<Scalar>(rng() % 3 == 0 ? rng() % p : 0);
                s.insert(v);
                inserted.push_back(v);
            }
            for (const auto& v : inserted) CHECK(s.contains(v));
            // Reduced echelon form: pivots strictly increase and pivot columns are unit.
            for (std::size_t i = 0; i < s.rank(); ++i) {
                CHECK(s.rows()[i][s.pivots()[i]] == 1);
                if (i > 0) CHECK(s.pivots()[i - 1] < s.pivots()[i]);
                for (std::size_t k = 0; k < s.rank(); ++k)
                    if (k != i) CHECK(s.rows()[k][s.pivots()[i]] == 0);
            }
            auto ns = s.null_space();
            CHECK(ns.size() + s.rank() == n);
            RowSpace nss(f, n);
            for (const auto& v : ns) CHECK(nss.insert(v));
            for (const auto& r : s.rows())
                for (const auto& v : ns) {
                    Scalar dot = 0;
                    for (std::size_t i = 0; i < n; ++i) dot = f.add(dot, f.mul(r[i], v[i]));
                    CHECK(dot == 0);
                }
        }
    }
}

TEST_CASE("axpy") {
    PrimeField f(7);
    Vector x{1, 2, 3}, y{6, 6, 6};
    axpy(f, 2, x, y);
    CHECK(y == Vector{1, 3, 5});
    CHECK(is_zero(Vector{0, 0}));
    CHECK_FALSE(is_zero(y));
}

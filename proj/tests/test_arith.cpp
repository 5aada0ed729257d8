#include <doctest.h>

#include <numeric>

#include "unicay/arith.hpp"

using namespace unicay;

TEST_CASE("factorize") {
    CHECK(factorize(1).factors.empty());
    const Factorization f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == PrimePower{2, 2});
    CHECK(f12.factors[1] == PrimePower{3, 1});
    const Factorization f45 = factorize(45);
    REQUIRE(f45.factors.size() == 2);
    CHECK(f45.factors[0] == PrimePower{3, 2});
    CHECK(f45.factors[1] == PrimePower{5, 1});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    // reconstruction property
    for (std::int64_t n = 1; n <= 2000; ++n) {
        std::int64_t prod = 1;
        std::int64_t last_prime = 0;
        for (const auto& [p, e] : factorize(n).factors) {
            CHECK(p > last_prime);
            last_prime = p;
            for (int i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(factorize(1)) == 1);
    CHECK(euler_phi(factorize(12)) == 4);
    for (std::int64_t p : {2, 3, 5, 7, 31, 97}) CHECK(euler_phi(factorize(p)) == p - 1);
    // against direct gcd enumeration
    for (std::int64_t n = 1; n <= 500; ++n) {
        std::int64_t count = 0;
        for (std::int64_t k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++count;
        CHECK(euler_phi(factorize(n)) == count);
    }
}

TEST_CASE("moebius") {
    CHECK(moebius(factorize(1)) == 1);
    CHECK(moebius(factorize(6)) == 1);
    CHECK(moebius(factorize(12)) == 0);
    CHECK(moebius(factorize(30)) == -1);
}

TEST_CASE("radical") {
    CHECK(radical(factorize(12)) == 6);
    CHECK(radical(factorize(45)) == 15);
    for (std::int64_t n : {1, 2, 6, 15, 30, 105}) CHECK(radical(factorize(n)) == n);
}

TEST_CASE("divisors") {
    CHECK(divisors(factorize(12)) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(factorize(6)) == std::vector<std::int64_t>{1, 2, 3, 6});
    CHECK(divisors(factorize(1)) == std::vector<std::int64_t>{1});
}

TEST_CASE("d_star") {
    CHECK(d_star(factorize(12)) == std::vector<DStarElement>{{2, 1}});
    CHECK(d_star(factorize(15)) == std::vector<DStarElement>{{2, 1}, {4, 1}, {8, 2}});
    CHECK(d_star(factorize(16)).empty());
    CHECK(d_star(factorize(2)).empty());
    // |D*| <= 2^r - 1
    for (std::int64_t n = 1; n <= 300; ++n) {
        std::size_t r = 0;
        for (const auto& pp : factorize(n).factors)
            if (pp.prime != 2) ++r;
        CHECK(d_star(factorize(n)).size() <= (std::size_t{1} << r) - 1);
    }
}

TEST_CASE("ramanujan sums: pinned values") {
    CHECK(ramanujan_direct(4, 2) == -2);
    CHECK(ramanujan_direct(6, 3) == -2);
    CHECK(ramanujan_closed(12, 6) == -4);
    CHECK(ramanujan_divisor_sum(6, 2) == -1);
    CHECK(ramanujan_divisor_sum(15, 5) == -4);
    for (std::int64_t n = 1; n <= 50; ++n) {
        CHECK(ramanujan_closed(n, 0) == euler_phi(factorize(n)));
        CHECK(ramanujan_divisor_sum(n, 0) == euler_phi(factorize(n)));
        CHECK(ramanujan_closed(n, 1) == moebius(factorize(n)));
        CHECK(ramanujan_direct(n, 1) == moebius(factorize(n)));
    }
}

TEST_CASE("ramanujan sums: three routes agree") {
    for (std::int64_t n = 1; n <= 100; ++n)
        for (std::int64_t m = 0; m < n; ++m) {
            const std::int64_t c = ramanujan_closed(n, m);
            CHECK(c == ramanujan_direct(n, m));
            CHECK(c == ramanujan_divisor_sum(n, m));
        }
}

TEST_CASE("ramanujan sums: depend only on gcd and are n-periodic") {
    for (std::int64_t n = 1; n <= 100; ++n)
        for (std::int64_t m = 0; m < n; ++m) {
            CHECK(ramanujan_closed(n, m) == ramanujan_closed(n, gcd_mod(m, n)));
            CHECK(ramanujan_closed(n, m) == ramanujan_closed(n, m + n));
        }
}

#include <doctest.h>

#include <random>
#include <sstream>

#include "unicay/graphs.hpp"
#include "unicay/poly.hpp"
#include "unicay/spectra.hpp"

using namespace unicay;

namespace {

DenseGraph x_graph(std::int64_t n) {
    return materialize(unitary_connection_set(n, n));
}

bool is_prime(std::int64_t n) {
    const Factorization f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

bool is_prime_power(std::int64_t n) {
    return factorize(n).factors.size() == 1;
}

bool is_two_p(std::int64_t n) {
    const Factorization f = factorize(n);
    return f.factors.size() == 2 && f.factors[0] == PrimePower{2, 1} && f.factors[1].exponent == 1;
}

bool is_power_of_two(std::int64_t n) {
    return n >= 2 && (n & (n - 1)) == 0;
}

// number of distinct roots of an integer polynomial with all-real roots:
// degree of p / gcd(p, p')
int distinct_root_count(const IntPoly& p) {
    std::vector<BigInt> d(p.degree());
    for (int i = 1; i <= p.degree(); ++i) d[i - 1] = p.coeff(i) * i;
    const IntPoly deriv{std::move(d)};
    return p.degree() - poly_gcd(p, deriv).degree();
}

}  // namespace

TEST_CASE("unitary_connection_set") {
    CHECK(unitary_connection_set(6, 6).elems == std::vector<std::int64_t>{1, 5});
    CHECK(unitary_connection_set(12, 3).elems == std::vector<std::int64_t>{4, 8});
    CHECK(unitary_connection_set(10, 2).elems == std::vector<std::int64_t>{5});
    CHECK(unitary_connection_set(8, 1).elems.empty());
    CHECK_THROWS_AS(unitary_connection_set(10, 3), std::invalid_argument);

    // symmetry and size phi(d)
    for (std::int64_t n = 2; n <= 64; ++n)
        for (std::int64_t d : divisors(factorize(n))) {
            if (d == 1) continue;
            const ConnectionSet cs = unitary_connection_set(n, d);
            CHECK(cs.elems.size() == static_cast<std::size_t>(euler_phi(factorize(d))));
            for (std::int64_t s : cs.elems) CHECK(cs.contains((n - s) % n));
        }
}

TEST_CASE("materialize is circulant and regular") {
    for (std::int64_t n = 2; n <= 64; ++n)
        for (std::int64_t d : divisors(factorize(n))) {
            if (d == 1) continue;
            const DenseGraph g = materialize(unitary_connection_set(n, d));
            const int k = static_cast<int>(euler_phi(factorize(d)));
            for (int i = 0; i < n; ++i) {
                CHECK(g.degree(i) == k);
                for (int j = 0; j < n; ++j) CHECK(g.adjacent(i, j) == g.adjacent(0, static_cast<int>(((j - i) % n + n) % n)));
            }
        }
}

TEST_CASE("bfs_all_pairs") {
    CHECK(bfs_all_pairs(x_graph(7)).diameter == 1);   // K_7
    CHECK(bfs_all_pairs(x_graph(6)).diameter == 3);   // hexagon
    CHECK(bfs_all_pairs(x_graph(8)).diameter == 2);   // K_{4,4}
    CHECK(bfs_all_pairs(x_graph(16)).diameter == 2);
    // X_n is connected for all n >= 2
    for (std::int64_t n = 2; n <= 64; ++n) CHECK(bfs_all_pairs(x_graph(n)).connected);
    // disconnected marker
    const DenseGraph two_edges = [] {
        DenseGraph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        return g;
    }();
    const DistanceProfile p = bfs_all_pairs(two_edges);
    CHECK_FALSE(p.connected);
    CHECK(p.diameter == -1);
    CHECK(p.at(0, 2) == -1);
}

TEST_CASE("structural predicates on X_n") {
    CHECK(is_crown(x_graph(10)));
    CHECK_FALSE(is_bipartite(x_graph(9)));
    CHECK(is_complete_bipartite(x_graph(8)));
    for (std::int64_t n = 2; n <= 64; ++n) {
        const DenseGraph g = x_graph(n);
        CHECK(is_bipartite(g) == (n % 2 == 0));
        CHECK(is_complete(g) == is_prime(n));
        CHECK(is_complete_bipartite(g) == is_power_of_two(n));
        CHECK(is_crown(g) == (is_two_p(n)));
    }
}

TEST_CASE("distance regularity") {
    CHECK(is_distance_regular(x_graph(9)).has_value());
    const auto hexagon = is_distance_regular(x_graph(6));
    REQUIRE(hexagon.has_value());
    CHECK(hexagon->b == std::vector<int>{2, 1, 1});
    CHECK(hexagon->c == std::vector<int>{1, 1, 2});
    CHECK_FALSE(is_distance_regular(x_graph(12)).has_value());

    for (std::int64_t n = 2; n <= 40; ++n) {
        const bool expected = is_prime_power(n) || is_two_p(n);
        CHECK(is_distance_regular(x_graph(n)).has_value() == expected);
        // shell certificate and full intersection-number audit agree
        CHECK(is_distance_regular(x_graph(n), true).has_value() == expected);
    }
    // disconnected input is not distance regular
    DenseGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(4, 5);
    CHECK_FALSE(is_distance_regular(g).has_value());
}

TEST_CASE("strong regularity") {
    const auto srg4 = is_strongly_regular_combinatorial(x_graph(4));
    REQUIRE(srg4.has_value());
    CHECK(*srg4 == SrgParams{4, 2, 0, 2});
    CHECK_FALSE(is_strongly_regular_combinatorial(x_graph(12)).has_value());
    CHECK_FALSE(is_strongly_regular_combinatorial(x_graph(6)).has_value());  // diameter 3
}

TEST_CASE("combinatorial SRG test agrees with the spectral one on random circulants") {
    std::mt19937 rng(20240817);
    int tested = 0;
    while (tested < 50) {
        const int n = 5 + static_cast<int>(rng() % 36);  // n in [5, 40]
        ConnectionSet cs;
        cs.n = n;
        for (int s = 1; s <= n / 2; ++s) {
            if (rng() % 2 == 0) continue;
            cs.elems.push_back(s);
            if (s != n - s) cs.elems.push_back(n - s);
        }
        std::sort(cs.elems.begin(), cs.elems.end());
        if (cs.elems.empty()) continue;
        ++tested;
        const DenseGraph g = materialize(cs);
        const DistanceProfile p = bfs_all_pairs(g);
        const bool spectral = p.connected && distinct_root_count(oracle_char_poly(g)) == 3;
        CHECK(is_strongly_regular_combinatorial(g).has_value() == spectral);
    }
}

TEST_CASE("edge list round trip") {
    const DenseGraph g = x_graph(12);
    std::stringstream ss;
    write_edge_list(g, ss);
    const DenseGraph h = read_edge_list(ss, 12);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) CHECK(g.adjacent(i, j) == h.adjacent(i, j));
}

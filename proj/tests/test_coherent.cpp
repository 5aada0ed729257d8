#include <doctest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "unicay/coherent.hpp"
#include "unicay/spectra.hpp"

using namespace unicay;

namespace {

DenseGraph x_graph(std::int64_t n) {
    return materialize(unitary_connection_set(n, n));
}

}  // namespace

TEST_CASE("h_matrix") {
    // n = 12: gamma = 6; d | 12 grouped by gamma(12/d)
    const CirculantSet h6 = h_matrix(12, 6);  // d in {1, 2}
    CHECK(h6.diagonal);
    CHECK(h6.offdiag.elems == std::vector<std::int64_t>{6});
    const CirculantSet h1 = h_matrix(12, 1);  // d = 12
    CHECK_FALSE(h1.diagonal);
    CHECK(h1.offdiag.elems == std::vector<std::int64_t>{1, 5, 7, 11});
    const CirculantSet h2 = h_matrix(12, 2);  // d in {3, 6}
    CHECK(h2.offdiag.elems == std::vector<std::int64_t>{2, 4, 8, 10});
    const CirculantSet h3 = h_matrix(12, 3);  // d = 4
    CHECK(h3.offdiag.elems == std::vector<std::int64_t>{3, 9});
    CHECK_THROWS_AS(h_matrix(12, 4), std::invalid_argument);

    // square free: H_x = A_{n/x}
    for (std::int64_t n : {6, 15, 30}) {
        for (std::int64_t x : divisors(factorize(n))) {
            const CirculantSet h = h_matrix(n, x);
            if (x == n) {
                CHECK(h.diagonal);
                CHECK(h.offdiag.elems.empty());
            } else {
                CHECK_FALSE(h.diagonal);
                CHECK(h.offdiag == unitary_connection_set(n, n / x));
            }
        }
    }
}

TEST_CASE("algebra_basis structure") {
    const CoherentBasis b6 = algebra_basis(6);
    REQUIRE(b6.members.size() == 4);
    CHECK(b6.members[0].label == "I");
    CHECK(b6.members[1].label == "A_2");
    CHECK(b6.members[2].label == "A_3");
    CHECK(b6.members[3].label == "A_6");

    CHECK(algebra_basis(12).members.size() == 5);  // tau(6) + 1

    const CoherentBasis b7 = algebra_basis(7);
    REQUIRE(b7.members.size() == 2);
    CHECK(b7.members[0].matrix.diagonal);
    CHECK(b7.members[1].matrix.offdiag.elems == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6});  // J - I
}

TEST_CASE("basis members are disjoint and cover Z_n plus the diagonal") {
    for (std::int64_t n = 2; n <= 128; ++n) {
        const CoherentBasis basis = algebra_basis(n);
        const Factorization f = factorize(n);
        const std::size_t expected = moebius(f) != 0
                                         ? divisors(f).size()
                                         : divisors(factorize(radical(f))).size() + 1;
        CHECK(basis.members.size() == expected);
        std::set<std::int64_t> seen;
        int diagonals = 0;
        for (const auto& m : basis.members) {
            if (m.matrix.diagonal) ++diagonals;
            for (std::int64_t s : m.matrix.offdiag.elems) CHECK(seen.insert(s).second);  // pairwise disjoint
        }
        CHECK(diagonals == 1);
        CHECK(seen.size() == static_cast<std::size_t>(n - 1));  // members sum to J
    }
}

TEST_CASE("wl_closure") {
    for (std::int64_t p : {3, 5, 7, 11}) CHECK(wl_closure(x_graph(p)).num_colors == 2);
    CHECK(wl_closure(x_graph(6)).num_colors == 4);
    CHECK(wl_closure(x_graph(12)).num_colors == 5);
    CHECK_THROWS_AS(wl_closure(DenseGraph(129)), std::invalid_argument);

    const DenseGraph g = x_graph(20);
    const WLColoring wl = wl_closure(g);
    CHECK(wl_is_stable(g, wl));
    // diagonal colors never mix with off-diagonal colors
    std::set<int> diag, offdiag;
    for (int u = 0; u < 20; ++u)
        for (int v = 0; v < 20; ++v) (u == v ? diag : offdiag).insert(wl.at(u, v));
    for (int c : diag) CHECK_FALSE(offdiag.contains(c));
}

TEST_CASE("wl color count equals the distinct eigenvalue count") {
    for (std::int64_t n = 2; n <= 32; ++n)
        CHECK(wl_closure(x_graph(n)).num_colors == static_cast<int>(unitary_spectrum(n).distinct_count()));
}

TEST_CASE("verify_pattern_polynomial") {
    const PatternReport r6 = verify_pattern_polynomial(6);
    CHECK(r6.pass);
    CHECK(r6.dim_closed_form == 4);
    CHECK(r6.dim_wl == 4);
    CHECK(r6.dim_spectral == 4);
    const PatternReport r12 = verify_pattern_polynomial(12);
    CHECK(r12.pass);
    CHECK(r12.dim_wl == 5);
    for (std::int64_t p : {3, 7, 13}) {
        const PatternReport r = verify_pattern_polynomial(p);
        CHECK(r.pass);
        CHECK(r.dim_wl == 2);
    }

    const nlohmann::json j = pattern_report_to_json(r6);
    CHECK(j.at("n") == 6);
    CHECK(j.at("pass") == true);
    CHECK(j.at("basis").size() == 4);
    CHECK(j.at("basis").at(0).at("label") == "I");
}

TEST_CASE("power_expansion_check") {
    CHECK(power_expansion_check(4));
    CHECK(power_expansion_check(6));
    for (std::int64_t n = 2; n <= 48; ++n) CHECK(power_expansion_check(n));
}

TEST_CASE("span_membership") {
    for (std::int64_t n : {6, 12, 16, 30})
        for (std::int64_t d : divisors(factorize(n))) {
            if (d == 1) continue;
            CHECK(span_membership(materialize(unitary_connection_set(n, d))));
        }
    // the 8-cycle is not integral: {1,7} is not a union of unit orbits
    ConnectionSet c8;
    c8.n = 8;
    c8.elems = {1, 7};
    CHECK_FALSE(span_membership(materialize(c8)));
    // K_n is the union over all d
    ConnectionSet all;
    all.n = 9;
    for (std::int64_t s = 1; s < 9; ++s) all.elems.push_back(s);
    CHECK(span_membership(materialize(all)));
    // non-circulant input is rejected
    DenseGraph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK_THROWS_AS(span_membership(path), std::invalid_argument);
}

TEST_CASE("unit-multiplication orbits partition Z_n minus zero") {
    for (std::int64_t n = 2; n <= 256; ++n) {
        std::set<std::int64_t> seen;
        for (std::int64_t d : divisors(factorize(n))) {
            if (d == 1) continue;
            for (std::int64_t s : unitary_connection_set(n, d).elems) CHECK(seen.insert(s).second);
        }
        CHECK(seen.size() == static_cast<std::size_t>(n - 1));
    }
}

TEST_CASE("dimension chain") {
    for (std::int64_t n = 2; n <= 64; ++n) {
        const Factorization f = factorize(n);
        const std::int64_t tau = static_cast<std::int64_t>(divisors(f).size());
        const std::int64_t dim_a = static_cast<std::int64_t>(algebra_basis(n).members.size());
        const std::int64_t dim_cycle = n / 2 + 1;  // distinct eigenvalue count of C_n
        CHECK(2 <= dim_a);
        CHECK(dim_a <= tau);
        CHECK(tau <= dim_cycle);
        CHECK(dim_cycle <= n);
        const std::int64_t expected =
            moebius(f) != 0 ? tau : static_cast<std::int64_t>(divisors(factorize(radical(f))).size()) + 1;
        CHECK(dim_a == expected);
    }
}

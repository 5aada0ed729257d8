#include "unicay/spectra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace unicay {

std::int64_t Spectrum::multiplicity_of(const BigInt& value) const {
    for (const auto& [v, m] : pairs)
        if (v == value) return m;
    return 0;
}

namespace {

Spectrum group_spectrum(std::int64_t n, const std::map<BigInt, std::int64_t>& mult) {
    Spectrum s;
    s.n = n;
    for (const auto& [v, m] : mult)
        if (m != 0) s.pairs.emplace_back(v, m);
    return s;
}

}  // namespace

Spectrum unitary_spectrum(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("unitary_spectrum: n must be positive");
    const Factorization f = factorize(n);
    std::map<BigInt, std::int64_t> mult;
    for (std::int64_t d : divisors(f)) mult[ramanujan_closed(n, d)] += euler_phi(factorize(n / d));
    return group_spectrum(n, mult);
}

IntPoly characteristic_polynomial(std::int64_t n) {
    IntPoly p = IntPoly::constant(1);
    for (const auto& [lambda, m] : unitary_spectrum(n).pairs) {
        const IntPoly factor(std::vector<BigInt>{-lambda, 1});
        for (std::int64_t i = 0; i < m; ++i) p = p * factor;
    }
    return p;
}

IntPoly minimal_polynomial(std::int64_t n) {
    IntPoly p = IntPoly::constant(1);
    for (const auto& [lambda, m] : unitary_spectrum(n).pairs) p = p * IntPoly(std::vector<BigInt>{-lambda, 1});
    return p;
}

BigInt determinant_closed(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("determinant_closed: n must be positive");
    const Factorization f = factorize(n);
    if (moebius(f) == 0) return 0;  // not square free
    if (n == 1) return 1;
    if (n == 2) return -1;
    const std::int64_t phi = euler_phi(f);
    BigInt det = 1;
    if (n % 2 == 0) {
        for (const auto& [b, t] : d_star(f)) {
            const std::int64_t e = phi / b;
            det *= (e % 2 == 0 ? 1 : -1) * pow(BigInt(b), static_cast<unsigned>(2 * e));
        }
    } else {
        const int r = static_cast<int>(f.factors.size());
        det = (r % 2 == 0) ? 1 : -1;
        for (const auto& [b, t] : d_star(f)) {
            const BigInt base = (t % 2 == 0) ? BigInt(b) : BigInt(-b);
            det *= pow(base, static_cast<unsigned>(phi / b));
        }
    }
    return det;
}

std::int64_t nullity(std::int64_t n) {
    return n - radical(factorize(n));
}

BigInt bareiss_determinant(std::vector<BigInt> m, int n) {
    if (n == 0) return 1;
    auto at = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i) * n + j]; };
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = k; j < n; ++j) at(k, j).swap(at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

namespace {

std::vector<BigInt> adjacency_matrix(const DenseGraph& g) {
    const int n = g.order();
    std::vector<BigInt> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) m[static_cast<std::size_t>(i) * n + j] = 1;
    return m;
}

}  // namespace

IntPoly oracle_char_poly(const DenseGraph& g) {
    const int n = g.order();
    if (n > 256) throw std::invalid_argument("oracle_char_poly: n > 256");
    const std::vector<BigInt> a = adjacency_matrix(g);

    // nodes 0, 1, -1, 2, -2, ...
    std::vector<BigInt> xs(n + 1), ys(n + 1);
    for (int i = 0; i <= n; ++i) {
        xs[i] = (i % 2 == 1) ? BigInt((i + 1) / 2) : BigInt(-(i / 2));
        // xI - A
        std::vector<BigInt> m(static_cast<std::size_t>(n) * n);
        for (int row = 0; row < n; ++row)
            for (int col = 0; col < n; ++col) {
                const std::size_t idx = static_cast<std::size_t>(row) * n + col;
                m[idx] = (row == col) ? xs[i] : -a[idx];
            }
        ys[i] = bareiss_determinant(std::move(m), n);
    }

    // Newton divided differences over exact rationals
    std::vector<BigRat> dd(n + 1);
    for (int i = 0; i <= n; ++i) dd[i] = BigRat(ys[i]);
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / BigRat(xs[i] - xs[i - level]);

    std::vector<BigRat> result{dd[0]};
    std::vector<BigRat> basis{1};
    for (int i = 1; i <= n; ++i) {
        // basis *= (x - xs[i-1])
        basis.push_back(0);
        for (int j = static_cast<int>(basis.size()) - 1; j >= 1; --j)
            basis[j] = basis[j - 1] - BigRat(xs[i - 1]) * basis[j];
        basis[0] = -BigRat(xs[i - 1]) * basis[0];
        result.resize(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) result[j] += dd[i] * basis[j];
    }

    std::vector<BigInt> coeffs(result.size());
    for (std::size_t j = 0; j < result.size(); ++j) {
        if (denominator(result[j]) != 1) throw std::logic_error("oracle_char_poly: non-integer coefficient");
        coeffs[j] = BigInt(numerator(result[j]));
    }
    return IntPoly(std::move(coeffs));
}

BigInt oracle_determinant(const DenseGraph& g) {
    const int n = g.order();
    if (n > 1024) throw std::invalid_argument("oracle_determinant: n > 1024");
    return bareiss_determinant(adjacency_matrix(g), n);
}

bool annihilates(const IntPoly& p, const DenseGraph& g) {
    const int n = g.order();
    const std::size_t sz = static_cast<std::size_t>(n) * n;
    std::vector<BigInt> acc(sz);
    auto add_scaled_identity = [&](const BigInt& c) {
        for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i) * n + i] += c;
    };
    if (p.is_zero()) return true;
    add_scaled_identity(p.coeff(p.degree()));
    for (int d = p.degree() - 1; d >= 0; --d) {
        // acc = A * acc + c_d * I
        std::vector<BigInt> next(sz);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!g.adjacent(i, k)) continue;
                const BigInt* row = &acc[static_cast<std::size_t>(k) * n];
                BigInt* out = &next[static_cast<std::size_t>(i) * n];
                for (int j = 0; j < n; ++j) out[j] += row[j];
            }
        acc = std::move(next);
        add_scaled_identity(p.coeff(d));
    }
    return std::all_of(acc.begin(), acc.end(), [](const BigInt& v) { return v == 0; });
}

bool table1_row_consistent(std::int64_t n) {
    const Factorization f = factorize(n);
    const std::int64_t phi = euler_phi(f);
    const std::int64_t gamma = radical(f);
    const bool square_free = moebius(f) != 0;
    const bool even = n % 2 == 0;
    const auto dstar = d_star(f);
    // r counts the distinct odd prime divisors
    const int r = static_cast<int>(std::count_if(f.factors.begin(), f.factors.end(),
                                                 [](const PrimePower& pp) { return pp.prime != 2; }));

    std::map<BigInt, std::int64_t> printed;
    if (square_free && even) {
        printed[BigInt(-1)] += phi;
        printed[BigInt(1)] += phi;
        for (const auto& [b, t] : dstar) {
            printed[BigInt(b)] += phi / b;
            printed[BigInt(-b)] += phi / b;
        }
    } else if (square_free) {
        printed[BigInt(r % 2 == 0 ? 1 : -1)] += phi;
        for (const auto& [b, t] : dstar) printed[BigInt(((r + t) % 2 == 0 ? 1 : -1) * b)] += phi / b;
    } else if (even) {
        printed[BigInt(0)] += n - gamma;
        printed[BigInt(-(n / gamma))] += phi;
        printed[BigInt(n / gamma)] += phi;
        for (const auto& [b, t] : dstar) {
            printed[BigInt(n / gamma * b)] += phi / b;
            printed[BigInt(-(n / gamma) * b)] += phi / b;
        }
    } else {
        printed[BigInt(0)] += n - gamma;
        printed[BigInt((r % 2 == 0 ? 1 : -1) * (n / gamma))] += phi;
        for (const auto& [b, t] : dstar) printed[BigInt(((r + t) % 2 == 0 ? 1 : -1) * b * (n / gamma))] += phi / b;
    }

    std::int64_t total = 0;
    for (const auto& [v, m] : printed) total += m;
    if (total != n) return false;
    return group_spectrum(n, printed) == unitary_spectrum(n);
}

nlohmann::json spectrum_to_json(const Spectrum& s) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [v, m] : s.pairs) pairs.push_back({v.convert_to<long long>(), m});
    return nlohmann::json{{"n", s.n}, {"pairs", pairs}};
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
    Spectrum s;
    s.n = j.at("n").get<std::int64_t>();
    for (const auto& p : j.at("pairs")) s.pairs.emplace_back(BigInt(p.at(0).get<long long>()), p.at(1).get<std::int64_t>());
    return s;
}

}  // namespace unicay

#include "unicay/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace unicay {

Factorization factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

std::int64_t euler_phi(const Factorization& f) {
    std::int64_t phi = 1;
    for (const auto& [p, e] : f.factors) {
        std::int64_t pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

int moebius(const Factorization& f) {
    for (const auto& pp : f.factors)
        if (pp.exponent >= 2) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::int64_t radical(const Factorization& f) {
    std::int64_t r = 1;
    for (const auto& pp : f.factors) r *= pp.prime;
    return r;
}

std::vector<std::int64_t> divisors(const Factorization& f) {
    std::vector<std::int64_t> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        std::int64_t pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<DStarElement> d_star(const Factorization& f) {
    std::vector<std::int64_t> a;
    for (const auto& pp : f.factors)
        if (pp.prime != 2) a.push_back(pp.prime - 1);
    std::vector<DStarElement> out;
    const std::size_t r = a.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
        std::int64_t b = 1;
        int t = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (mask >> j & 1) {
                b *= a[j];
                ++t;
            }
        }
        out.push_back({b, t});
    }
    std::sort(out.begin(), out.end(), [](const DStarElement& x, const DStarElement& y) {
        return std::tie(x.value, x.t) < std::tie(y.value, y.t);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int64_t gcd_mod(std::int64_t m, std::int64_t n) {
    m = ((m % n) + n) % n;
    return m == 0 ? n : std::gcd(m, n);
}

std::int64_t ramanujan_closed(std::int64_t n, std::int64_t m) {
    if (n < 1) throw std::invalid_argument("ramanujan_closed: n must be positive");
    const std::int64_t d = gcd_mod(m, n);
    const Factorization q = factorize(n / d);
    const int mu = moebius(q);
    if (mu == 0) return 0;
    return mu * (euler_phi(factorize(n)) / euler_phi(q));
}

std::int64_t ramanujan_divisor_sum(std::int64_t n, std::int64_t m) {
    if (n < 1) throw std::invalid_argument("ramanujan_divisor_sum: n must be positive");
    const std::int64_t g = gcd_mod(m, n);
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(factorize(g)))
        sum += moebius(factorize(n / d)) * d;
    return sum;
}

std::int64_t ramanujan_direct(std::int64_t n, std::int64_t m) {
    if (n < 1) throw std::invalid_argument("ramanujan_direct: n must be positive");
    m = ((m % n) + n) % n;
    double re = 0.0, im = 0.0;
    for (std::int64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        // angle reduced mod n before the trig call to keep the argument small
        const double theta = 2.0 * std::numbers::pi * static_cast<double>((k * m) % n) / static_cast<double>(n);
        re += std::cos(theta);
        im += std::sin(theta);
    }
    const double rounded = std::round(re);
    if (std::abs(im) >= 1e-6 || std::abs(re - rounded) >= 1e-6)
        throw std::runtime_error("ramanujan_direct: rounding tolerance violated");
    return static_cast<std::int64_t>(rounded);
}

}  // namespace unicay

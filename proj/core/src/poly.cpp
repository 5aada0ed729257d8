#include "unicay/poly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unicay {

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    return IntPoly(std::vector<BigInt>{std::move(c)});
}

IntPoly IntPoly::monomial(BigInt c, int degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x_power_minus_one(int n) {
    std::vector<BigInt> v(n + 1);
    v[0] = -1;
    v[n] = 1;
    return IntPoly(std::move(v));
}

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

BigInt IntPoly::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(v));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag;
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

using RatVec = std::vector<BigRat>;

RatVec to_rat(const IntPoly& p) {
    RatVec v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return v;
}

void rat_trim(RatVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Long division over Q: a = q*b + r, deg r < deg b.
std::pair<RatVec, RatVec> rat_divmod(RatVec a, const RatVec& b) {
    RatVec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        const BigRat factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();  // leading term cancels exactly
        rat_trim(a);
    }
    rat_trim(q);
    return {std::move(q), std::move(a)};
}

IntPoly rat_to_int(const RatVec& v, const char* what) {
    std::vector<BigInt> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1) throw std::domain_error(std::string(what) + ": non-integer coefficient");
        c[i] = numerator(v[i]);
    }
    return IntPoly(std::move(c));
}

// Primitive integer polynomial with positive leading coefficient,
// proportional to the given rational polynomial.
IntPoly primitive_from_rat(const RatVec& v) {
    if (v.empty()) return IntPoly();
    BigInt den = 1;
    for (const auto& r : v) den = lcm(den, BigInt(denominator(r)));
    std::vector<BigInt> c(v.size());
    BigInt content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        c[i] = BigInt(numerator(v[i])) * (den / BigInt(denominator(v[i])));
        content = gcd(content, c[i]);
    }
    if (c.back() < 0) content = -content;
    for (auto& x : c) x /= content;
    return IntPoly(std::move(c));
}

}  // namespace

std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    auto [q, r] = rat_divmod(to_rat(a), to_rat(b));
    return {rat_to_int(q, "poly_divmod"), rat_to_int(r, "poly_divmod")};
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    RatVec u = to_rat(a), v = to_rat(b);
    if (u.empty() && v.empty()) throw std::domain_error("poly_gcd: both arguments zero");
    while (!v.empty()) {
        RatVec r = rat_divmod(std::move(u), v).second;
        // renormalizing to a primitive integer polynomial between steps keeps
        // the rational Euclid iterates from blowing up
        u = to_rat(primitive_from_rat(v));
        v = to_rat(primitive_from_rat(r));
    }
    return primitive_from_rat(u);
}

IntPoly cyclotomic(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    static std::map<std::int64_t, IntPoly> memo;
    static std::mutex memo_mutex;
    {
        std::scoped_lock lk(memo_mutex);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    IntPoly result = IntPoly::x_power_minus_one(static_cast<int>(n));
    for (std::int64_t d : divisors(factorize(n))) {
        if (d == n) continue;
        result = poly_divmod(result, cyclotomic(d)).first;
    }
    std::scoped_lock lk(memo_mutex);
    memo.emplace(n, result);
    return result;
}

IntPoly representer(std::int64_t n, std::int64_t d) {
    if (d < 1 || n % d != 0) throw std::invalid_argument("representer: d must divide n");
    std::vector<BigInt> v(n);
    for (std::int64_t k = 1; k <= d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        v[(n / d * k) % n] = 1;
    }
    return IntPoly(std::move(v));
}

IntPoly ramanujan_poly(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("ramanujan_poly: n must be positive");
    const Factorization f = factorize(n);
    const std::int64_t phi_n = euler_phi(f);
    // c_n(i) depends only on gcd(i, n); evaluate once per divisor
    std::map<std::int64_t, std::int64_t> by_gcd;
    for (std::int64_t d : divisors(f)) {
        const Factorization q = factorize(n / d);
        const int mu = moebius(q);
        by_gcd[d] = mu == 0 ? 0 : mu * (phi_n / euler_phi(q));
    }
    std::vector<BigInt> v(n);
    for (std::int64_t i = 0; i < n; ++i) v[i] = by_gcd[gcd_mod(i, n)];
    return IntPoly(std::move(v));
}

bool is_singular_circulant(const IntPoly& p, std::int64_t n) {
    if (p.is_zero()) return true;
    return poly_gcd(p, IntPoly::x_power_minus_one(static_cast<int>(n))).degree() >= 1;
}

}  // namespace unicay

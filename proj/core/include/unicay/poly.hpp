#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unicay/arith.hpp"

namespace unicay {

/// Dense integer-coefficient polynomial; coeffs()[i] is the coefficient of
/// x^i and the top coefficient is nonzero (the zero polynomial is empty).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, int degree);
    /// x^n - 1
    static IntPoly x_power_minus_one(int n);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    BigInt coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& leading() const { return coeffs_.back(); }

    BigInt operator()(const BigInt& x) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly&) const = default;

    std::string str() const;

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

/// Quotient and remainder with a = q*b + r and deg r < deg b, computed over
/// the rationals. Throws std::domain_error if b is zero or if q, r do not
/// come out with integer coefficients (every caller here divides by a monic
/// polynomial or performs an exact division).
std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& a, const IntPoly& b);

/// gcd over Q, returned as the primitive integer polynomial with positive
/// leading coefficient; poly_gcd(p, 0) is the primitive part of p.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Cyclotomic polynomial Phi_n, by exact division of x^n - 1 by all Phi_d
/// with d | n, d < n. Memoized.
IntPoly cyclotomic(std::int64_t n);

/// Representer polynomial of A_d inside Z_n: sum over k in U_d of
/// x^(n k / d mod n). Requires d | n.
IntPoly representer(std::int64_t n, std::int64_t d);

/// R_n(x) = sum_i c_n(i) x^i for 0 <= i < n.
IntPoly ramanujan_poly(std::int64_t n);

/// True iff the n x n circulant with representer polynomial p is singular,
/// i.e. gcd(p, x^n - 1) is non-constant.
bool is_singular_circulant(const IntPoly& p, std::int64_t n);

}  // namespace unicay

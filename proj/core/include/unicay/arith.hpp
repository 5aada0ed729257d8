#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace unicay {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

struct PrimePower {
    std::int64_t prime;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Canonical prime-power decomposition of a positive integer.
/// factorize(1) yields an empty factor list.
struct Factorization {
    std::int64_t n = 1;
    std::vector<PrimePower> factors;  // primes strictly increasing
};

/// Trial division; throws std::invalid_argument for n < 1.
Factorization factorize(std::int64_t n);

std::int64_t euler_phi(const Factorization& f);
int moebius(const Factorization& f);

/// Product of the distinct prime divisors (square-free part); radical(1) = 1.
std::int64_t radical(const Factorization& f);

/// All positive divisors, ascending.
std::vector<std::int64_t> divisors(const Factorization& f);

/// One subset product b = prod a_j over a t-element subset of
/// {p - 1 : p odd prime divisor of n}.
struct DStarElement {
    std::int64_t value;
    int t;
    bool operator==(const DStarElement&) const = default;
};

/// All nonempty subset products of {p - 1 : p odd prime dividing n},
/// sorted by (value, t). Entries that coincide in both value and t are
/// merged; equal values with different t stay distinct.
std::vector<DStarElement> d_star(const Factorization& f);

/// gcd(m mod n, n) with the convention gcd(0, n) = n.
std::int64_t gcd_mod(std::int64_t m, std::int64_t n);

/// Ramanujan's sum c_n(m) via the Hoelder closed form
/// mu(n/d) * phi(n) / phi(n/d) with d = gcd(m, n).
std::int64_t ramanujan_closed(std::int64_t n, std::int64_t m);

/// Ramanujan's sum via the von Sterneck divisor sum
/// sum over d | gcd(m, n) of mu(n/d) * d.
std::int64_t ramanujan_divisor_sum(std::int64_t n, std::int64_t m);

/// Ramanujan's sum straight from the definition: the floating-point sum of
/// exp(2 pi i k m / n) over units k mod n, rounded to the nearest integer.
/// Throws std::runtime_error if the imaginary part or the distance to the
/// nearest integer exceeds 1e-6. Independent oracle for the exact forms.
std::int64_t ramanujan_direct(std::int64_t n, std::int64_t m);

}  // namespace unicay

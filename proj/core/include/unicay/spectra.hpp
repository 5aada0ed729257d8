#pragma once

#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "unicay/graphs.hpp"
#include "unicay/poly.hpp"

namespace unicay {

/// Integer eigenvalue multiset as (value, multiplicity) pairs, values
/// strictly increasing, multiplicities summing to n.
struct Spectrum {
    std::int64_t n = 0;
    std::vector<std::pair<BigInt, std::int64_t>> pairs;

    std::int64_t multiplicity_of(const BigInt& value) const;
    std::size_t distinct_count() const { return pairs.size(); }
    bool operator==(const Spectrum&) const = default;
};

/// Spectrum of X_n: the multiset {c_n(i) : 0 <= i < n}, grouped. Evaluated
/// per divisor d of n (c_n(i) depends only on gcd(i, n), and gcd(i, n) = d
/// happens for exactly phi(n/d) values of i).
Spectrum unitary_spectrum(std::int64_t n);

/// prod over the spectrum of (x - lambda)^m; monic of degree n.
IntPoly characteristic_polynomial(std::int64_t n);

/// prod over distinct eigenvalues of (x - lambda).
IntPoly minimal_polynomial(std::int64_t n);

/// det A(X_n) by the closed-form case split: 0 when n is not square free,
/// -1 at n = 2, and the D*-product formulas for square-free n.
BigInt determinant_closed(std::int64_t n);

/// n - gamma(n), the dimension of the null space of A(X_n).
std::int64_t nullity(std::int64_t n);

/// Exact characteristic polynomial of an adjacency matrix: det(xI - A)
/// evaluated at the integer nodes 0, 1, -1, 2, -2, ... by fraction-free
/// (Bareiss) elimination, then interpolated with exact rational arithmetic.
/// Guard: n <= 256.
IntPoly oracle_char_poly(const DenseGraph& g);

/// Exact determinant by fraction-free elimination. Guard: n <= 1024.
BigInt oracle_determinant(const DenseGraph& g);

/// Exact determinant of an explicit integer matrix (row-major, n x n).
BigInt bareiss_determinant(std::vector<BigInt> m, int n);

/// p(A) over exact integers; true iff the result is the zero matrix.
bool annihilates(const IntPoly& p, const DenseGraph& g);

/// True when the printed spectrum-table row for this n is a consistent
/// spectrum (multiplicities sum to n and the multiset matches the c_n(i)
/// eigenvalues). The non-square-free rows fail this as printed.
bool table1_row_consistent(std::int64_t n);

nlohmann::json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const nlohmann::json& j);

}  // namespace unicay

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "unicay/graphs.hpp"

namespace unicay {

/// A 0/1 circulant given by its off-diagonal connection set plus a flag for
/// the diagonal (the A_1 = I contribution).
struct CirculantSet {
    ConnectionSet offdiag;
    bool diagonal = false;
    bool operator==(const CirculantSet&) const = default;
};

/// H_x = sum of A_d over d | n with gamma(n/d) = x. Requires x | gamma(n).
CirculantSet h_matrix(std::int64_t n, std::int64_t x);

struct BasisMember {
    std::string label;
    CirculantSet matrix;
    bool operator==(const BasisMember&) const = default;
};

/// The disjoint 0/1 basis of the adjacency algebra of X_n:
/// {A_d : d | n} for square-free n, otherwise
/// {I, H_gamma(n) - I} plus {H_x : x | gamma(n), x != gamma(n)}.
struct CoherentBasis {
    std::int64_t n = 1;
    std::vector<BasisMember> members;
};

CoherentBasis algebra_basis(std::int64_t n);

/// Stable coloring of ordered vertex pairs under 2-dimensional
/// Weisfeiler-Leman refinement; num_colors is the dimension of the coherent
/// closure.
struct WLColoring {
    int n = 0;
    std::vector<int> color;  // n*n, row-major
    int rounds = 0;
    int num_colors = 0;

    int at(int u, int v) const { return color[static_cast<std::size_t>(u) * n + v]; }
};

/// 2-WL pair refinement starting from (diagonal, edge, non-edge). Color ids
/// are assigned in lexicographic signature order, so they are reproducible
/// run to run. Guard: n <= 128.
WLColoring wl_closure(const DenseGraph& g);

/// One more refinement round applied to a coloring; true iff nothing
/// changes. Exposed for the stability property tests.
bool wl_is_stable(const DenseGraph& g, const WLColoring& coloring);

struct PatternReport {
    std::int64_t n = 0;
    int dim_closed_form = 0;  // basis member count
    int dim_wl = 0;           // coherent-closure dimension from 2-WL
    int dim_spectral = 0;     // distinct eigenvalues of X_n
    bool members_are_color_unions = false;
    bool pass = false;
    CoherentBasis basis;
};

/// Checks dim A(X_n) three ways (basis count, WL color count, distinct
/// eigenvalue count) and that every basis member is a union of WL color
/// classes. Failures land in the report, nothing throws.
PatternReport verify_pattern_polynomial(std::int64_t n);

/// Expands A_n^f for f = 1..dim-1 on the disjoint {H_x} members by sampling
/// one entry per member, and verifies the reconstruction is exact. For even
/// n additionally verifies the parity separation: odd powers touch only
/// odd-x members, even powers only even-x members. Guard: n <= 64.
bool power_expansion_check(std::int64_t n);

/// True iff the circulant graph g lies in the span of {A_d : d | n} with
/// 0/1 coefficients, i.e. its connection set is closed under multiplication
/// by units mod n. Throws std::invalid_argument for non-circulant input.
/// Guard: n <= 256.
bool span_membership(const DenseGraph& g);

nlohmann::json pattern_report_to_json(const PatternReport& r);

}  // namespace unicay

#include "unicay/coherent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "unicay/spectra.hpp"

namespace unicay {

CirculantSet h_matrix(std::int64_t n, std::int64_t x) {
    const Factorization f = factorize(n);
    const std::int64_t gamma = radical(f);
    if (x < 1 || gamma % x != 0) throw std::invalid_argument("h_matrix: x must divide gamma(n)");
    CirculantSet h;
    h.offdiag.n = n;
    std::set<std::int64_t> elems;
    for (std::int64_t d : divisors(f)) {
        if (radical(factorize(n / d)) != x) continue;
        if (d == 1) {
            h.diagonal = true;  // A_1 = I
            continue;
        }
        const ConnectionSet cs = unitary_connection_set(n, d);
        elems.insert(cs.elems.begin(), cs.elems.end());
    }
    h.offdiag.elems.assign(elems.begin(), elems.end());
    return h;
}

CoherentBasis algebra_basis(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("algebra_basis: n must be >= 2");
    const Factorization f = factorize(n);
    CoherentBasis basis;
    basis.n = n;
    if (moebius(f) != 0) {
        // square free: {A_d : d | n}, with A_1 = I
        for (std::int64_t d : divisors(f)) {
            BasisMember m;
            if (d == 1) {
                m.label = "I";
                m.matrix.offdiag.n = n;
                m.matrix.diagonal = true;
            } else {
                m.label = "A_" + std::to_string(d);
                m.matrix.offdiag = unitary_connection_set(n, d);
            }
            basis.members.push_back(std::move(m));
        }
    } else {
        const std::int64_t gamma = radical(f);
        BasisMember identity;
        identity.label = "I";
        identity.matrix.offdiag.n = n;
        identity.matrix.diagonal = true;
        basis.members.push_back(std::move(identity));

        BasisMember top;
        top.label = "H_" + std::to_string(gamma) + "-I";
        top.matrix = h_matrix(n, gamma);
        top.matrix.diagonal = false;
        basis.members.push_back(std::move(top));

        for (std::int64_t x : divisors(factorize(gamma))) {
            if (x == gamma) continue;
            BasisMember m;
            m.label = "H_" + std::to_string(x);
            m.matrix = h_matrix(n, x);
            basis.members.push_back(std::move(m));
        }
    }
    return basis;
}

namespace {

// One refinement round. Signatures are canonicalized by sorting, so the new
// color ids depend only on the partition, not on the incoming id values.
std::vector<int> wl_round(const DenseGraph& g, const std::vector<int>& color, int num_colors, int& new_count) {
    const int n = g.order();
    const std::int64_t base = num_colors;
    std::vector<std::vector<std::int64_t>> sigs(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            std::vector<std::int64_t>& sig = sigs[static_cast<std::size_t>(u) * n + v];
            sig.reserve(n + 1);
            sig.push_back(color[static_cast<std::size_t>(u) * n + v]);
            for (int w = 0; w < n; ++w)
                sig.push_back(color[static_cast<std::size_t>(u) * n + w] * base +
                              color[static_cast<std::size_t>(w) * n + v]);
            std::sort(sig.begin() + 1, sig.end());
        }
    std::vector<std::vector<std::int64_t>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    new_count = static_cast<int>(sorted.size());
    std::vector<int> next(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i)
        next[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    return next;
}

std::vector<int> wl_initial(const DenseGraph& g, int& count) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n) * n);
    bool has_edge = false, has_nonedge = false;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int c;
            if (u == v)
                c = 0;
            else if (g.adjacent(u, v)) {
                c = 1;
                has_edge = true;
            } else {
                c = 2;
                has_nonedge = true;
            }
            color[static_cast<std::size_t>(u) * n + v] = c;
        }
    // compress to contiguous ids
    if (!has_nonedge) {
        count = has_edge ? 2 : 1;
    } else if (!has_edge) {
        count = 2;
        for (auto& c : color)
            if (c == 2) c = 1;
    } else {
        count = 3;
    }
    return color;
}

}  // namespace

WLColoring wl_closure(const DenseGraph& g) {
    const int n = g.order();
    if (n > 128) throw std::invalid_argument("wl_closure: n > 128");
    WLColoring wl;
    wl.n = n;
    int count = 0;
    wl.color = wl_initial(g, count);
    wl.rounds = 0;
    for (;;) {
        int new_count = 0;
        std::vector<int> next = wl_round(g, wl.color, count, new_count);
        if (new_count == count) break;  // refinement cannot merge classes
        wl.color = std::move(next);
        count = new_count;
        ++wl.rounds;
    }
    wl.num_colors = count;
    return wl;
}

bool wl_is_stable(const DenseGraph& g, const WLColoring& coloring) {
    int new_count = 0;
    wl_round(g, coloring.color, coloring.num_colors, new_count);
    return new_count == coloring.num_colors;
}

PatternReport verify_pattern_polynomial(std::int64_t n) {
    PatternReport report;
    report.n = n;
    report.basis = algebra_basis(n);
    report.dim_closed_form = static_cast<int>(report.basis.members.size());
    report.dim_spectral = static_cast<int>(unitary_spectrum(n).distinct_count());

    const DenseGraph g = materialize(unitary_connection_set(n, n));
    const WLColoring wl = wl_closure(g);
    report.dim_wl = wl.num_colors;

    // which member covers each residue (j - i) mod n; 0 means the diagonal
    std::vector<int> member_of_residue(n, -1);
    for (std::size_t m = 0; m < report.basis.members.size(); ++m) {
        const auto& mat = report.basis.members[m].matrix;
        if (mat.diagonal) member_of_residue[0] = static_cast<int>(m);
        for (std::int64_t s : mat.offdiag.elems) member_of_residue[s] = static_cast<int>(m);
    }
    report.members_are_color_unions = std::none_of(member_of_residue.begin(), member_of_residue.end(),
                                                   [](int m) { return m < 0; });
    std::map<int, int> member_of_color;
    for (int u = 0; u < n && report.members_are_color_unions; ++u)
        for (int v = 0; v < n; ++v) {
            const int member = member_of_residue[((v - u) % n + n) % n];
            auto [it, inserted] = member_of_color.emplace(wl.at(u, v), member);
            if (!inserted && it->second != member) {
                report.members_are_color_unions = false;
                break;
            }
        }

    report.pass = report.dim_closed_form == report.dim_wl && report.dim_wl == report.dim_spectral &&
                  report.members_are_color_unions;
    return report;
}

bool power_expansion_check(std::int64_t n) {
    if (n > 64) throw std::invalid_argument("power_expansion_check: n > 64");
    const Factorization f = factorize(n);
    const std::int64_t gamma = radical(f);
    const bool even = n % 2 == 0;
    const std::size_t dim = moebius(f) != 0 ? divisors(f).size() : divisors(factorize(gamma)).size() + 1;
    const std::int64_t ell = static_cast<std::int64_t>(dim) - 1;

    struct Member {
        std::int64_t x;
        CirculantSet mat;
    };
    std::vector<Member> members;
    for (std::int64_t x : divisors(factorize(gamma))) members.push_back({x, h_matrix(n, x)});

    // residue -> member index; the H_x supports partition Z_n plus diagonal
    std::vector<int> owner(n, -1);
    for (std::size_t m = 0; m < members.size(); ++m) {
        if (members[m].mat.diagonal) owner[0] = static_cast<int>(m);
        for (std::int64_t s : members[m].mat.offdiag.elems) owner[s] = static_cast<int>(m);
    }
    if (std::any_of(owner.begin(), owner.end(), [](int m) { return m < 0; })) return false;

    // first row of A_n, powered by cyclic convolution
    std::vector<BigInt> base(n), row(n);
    for (std::int64_t s : unitary_connection_set(n, n).elems) base[s] = 1;
    row[0] = 1;  // A^0 = I
    for (std::int64_t power = 1; power <= ell; ++power) {
        std::vector<BigInt> next(n);
        for (int i = 0; i < n; ++i) {
            if (row[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (base[j] != 0) next[(i + j) % n] += row[i];
        }
        row = std::move(next);

        // sample one entry per member, then demand exact reconstruction
        std::vector<BigInt> coeff(members.size());
        std::vector<bool> sampled(members.size(), false);
        for (int s = 0; s < n; ++s) {
            const int m = owner[s];
            if (!sampled[m]) {
                coeff[m] = row[s];
                sampled[m] = true;
            } else if (row[s] != coeff[m]) {
                return false;
            }
        }
        if (even) {
            for (std::size_t m = 0; m < members.size(); ++m) {
                const bool x_even = members[m].x % 2 == 0;
                const bool power_even = power % 2 == 0;
                if (x_even != power_even && coeff[m] != 0) return false;
            }
        }
    }
    return true;
}

bool span_membership(const DenseGraph& g) {
    const int n = g.order();
    if (n > 256) throw std::invalid_argument("span_membership: n > 256");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j) != g.adjacent(0, ((j - i) % n + n) % n))
                throw std::invalid_argument("span_membership: graph is not circulant");
    std::vector<bool> in_set(n, false);
    for (int s = 1; s < n; ++s) in_set[s] = g.adjacent(0, s);
    for (int s = 1; s < n; ++s) {
        if (!in_set[s]) continue;
        for (int u = 1; u < n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            if (!in_set[static_cast<std::size_t>(s) * u % n]) return false;
        }
    }
    return true;
}

nlohmann::json pattern_report_to_json(const PatternReport& r) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& m : r.basis.members) {
        nlohmann::json cs = nlohmann::json::array();
        for (std::int64_t s : m.matrix.offdiag.elems) cs.push_back(s);
        basis.push_back({{"label", m.label}, {"connection_set", cs}});
    }
    return nlohmann::json{{"n", r.n},
                          {"dim_closed_form", r.dim_closed_form},
                          {"dim_wl", r.dim_wl},
                          {"dim_spectral", r.dim_spectral},
                          {"pass", r.pass},
                          {"basis", basis}};
}

}  // namespace unicay

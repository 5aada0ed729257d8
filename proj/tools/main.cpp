// unicay: exact spectra, polynomials, and coherent-algebra checks for
// unitary Cayley graphs.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unicay/coherent.hpp"
#include "unicay/poly.hpp"
#include "unicay/spectra.hpp"
#include "unicay/sweep.hpp"

namespace {

using unicay::BigInt;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr std::int64_t kClosedFormLimit = 1'000'000;
constexpr std::int64_t kOracleLimit = 128;
constexpr std::int64_t kDefaultSweepCeiling = 64;

struct Options {
    std::string format = "table";
    std::string output;
    std::int64_t max_n = 0;  // 0: use per-command default
};

// "(x+3)*x^6*(x-6)": factors ascending by root
std::string factored(const std::vector<std::pair<BigInt, std::int64_t>>& factors) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [root, mult] : factors) {
        if (!first) os << "*";
        first = false;
        if (root == 0)
            os << "x";
        else if (root < 0)
            os << "(x+" << -root << ")";
        else
            os << "(x-" << root << ")";
        if (mult > 1) os << "^" << mult;
    }
    return os.str();
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
    }
}

int cmd_spectrum(const Options& opt, std::int64_t n) {
    const unicay::Spectrum s = unicay::unitary_spectrum(n);
    if (opt.format == "json") {
        emit(opt, unicay::spectrum_to_json(s).dump());
    } else {
        std::ostringstream os;
        os << "spectrum of X_" << n << " (eigenvalue, multiplicity):\n";
        for (const auto& [v, m] : s.pairs) os << "  " << v << "  " << m << "\n";
        emit(opt, os.str());
    }
    return kExitOk;
}

int cmd_charpoly(const Options& opt, std::int64_t n) {
    const unicay::Spectrum s = unicay::unitary_spectrum(n);
    if (opt.format == "json") {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [v, m] : s.pairs) factors.push_back({v.convert_to<long long>(), m});
        emit(opt, nlohmann::json{{"n", n}, {"factors", factors}}.dump());
    } else {
        emit(opt, factored(s.pairs));
    }
    return kExitOk;
}

int cmd_minpoly(const Options& opt, std::int64_t n) {
    const unicay::Spectrum s = unicay::unitary_spectrum(n);
    std::vector<std::pair<BigInt, std::int64_t>> roots;
    for (const auto& [v, m] : s.pairs) roots.emplace_back(v, 1);
    if (opt.format == "json") {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& [v, m] : roots) r.push_back(v.convert_to<long long>());
        emit(opt, nlohmann::json{{"n", n}, {"roots", r}}.dump());
    } else {
        emit(opt, factored(roots));
    }
    return kExitOk;
}

int cmd_det(const Options& opt, std::int64_t n) {
    const BigInt det = unicay::determinant_closed(n);
    if (opt.format == "json") {
        emit(opt, nlohmann::json{{"n", n}, {"det", det.str()}}.dump());
    } else {
        emit(opt, det.str());
    }
    return kExitOk;
}

int report_check(const Options& opt, std::int64_t n, const std::string& property, const std::string& computed_name,
                 bool computed, const std::string& predicted_name, bool predicted) {
    const bool agree = computed == predicted;
    if (opt.format == "json") {
        emit(opt, nlohmann::json{{"n", n},
                                 {"property", property},
                                 {"computed", computed},
                                 {"predicted", predicted},
                                 {"agree", agree}}
                      .dump());
    } else {
        std::ostringstream os;
        os << computed_name << ": " << (computed ? "true" : "false") << "; " << predicted_name << ": "
           << (predicted ? "true" : "false") << "; " << (agree ? "AGREE" : "DISAGREE");
        emit(opt, os.str());
    }
    return agree ? kExitOk : kExitMismatch;
}

int cmd_check(const Options& opt, std::int64_t n, const std::string& property) {
    using namespace unicay;
    const Factorization f = factorize(n);
    const bool square_free = moebius(f) != 0;
    const bool prime = f.factors.size() == 1 && f.factors[0].exponent == 1;
    const bool prime_power = f.factors.size() == 1;
    const bool two_p = f.factors.size() == 2 && f.factors[0].prime == 2 && f.factors[0].exponent == 1 &&
                       f.factors[1].exponent == 1;

    if (property == "singular") {
        const bool computed = is_singular_circulant(representer(n, n), n);
        return report_check(opt, n, property, "singular (gcd with x^n-1)", computed,
                            "closed form (n not square-free)", !square_free);
    }

    const DenseGraph g = materialize(unitary_connection_set(n, n));
    if (property == "dr") {
        return report_check(opt, n, property, "brute-force", is_distance_regular(g).has_value(),
                            "characterization (prime power or 2p)", prime_power || two_p);
    }
    if (property == "srg") {
        const bool spectral = g.degree(0) >= 1 && unitary_spectrum(n).distinct_count() == 3;
        return report_check(opt, n, property, "combinatorial (diameter 2)",
                            is_strongly_regular_combinatorial(g).has_value(),
                            "spectral (three distinct eigenvalues)", spectral);
    }
    if (property == "bipartite")
        return report_check(opt, n, property, "BFS 2-coloring", is_bipartite(g), "closed form (n even)",
                            n % 2 == 0);
    if (property == "complete")
        return report_check(opt, n, property, "degree check", is_complete(g), "closed form (n prime)", prime);
    if (property == "crown")
        return report_check(opt, n, property, "structure check", is_crown(g), "closed form (n = 2p)", two_p);
    if (property == "integral")
        return report_check(opt, n, property, "span membership in {A_d}", span_membership(g),
                            "closed form (X_n always integral)", true);
    std::cerr << "unknown property: " << property << "\n";
    return kExitUsage;
}

int cmd_basis(const Options& opt, std::int64_t n) {
    const unicay::PatternReport report = unicay::verify_pattern_polynomial(n);
    if (opt.format == "json") {
        emit(opt, unicay::pattern_report_to_json(report).dump());
    } else {
        std::ostringstream os;
        os << "dim A(X_" << n << "): basis=" << report.dim_closed_form << " wl=" << report.dim_wl
           << " spectral=" << report.dim_spectral << " -> " << (report.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& m : report.basis.members) {
            os << "  " << m.label << (m.matrix.diagonal ? " [diag]" : "") << " {";
            for (std::size_t i = 0; i < m.matrix.offdiag.elems.size(); ++i)
                os << (i ? "," : "") << m.matrix.offdiag.elems[i];
            os << "}\n";
        }
        emit(opt, os.str());
    }
    return report.pass ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& opt, std::int64_t n_min, std::int64_t n_max) {
    const std::int64_t ceiling = opt.max_n > 0 ? opt.max_n : kDefaultSweepCeiling;
    if (opt.max_n > kDefaultSweepCeiling)
        std::cerr << "warning: sweep above n=" << kDefaultSweepCeiling
                  << " runs an O(n^4) exact oracle per graph; expect long runtimes\n";
    if (n_max > ceiling) {
        std::cerr << "verify: n_max " << n_max << " exceeds the ceiling " << ceiling
                  << " (raise it with --max-n)\n";
        return kExitUsage;
    }
    const unicay::SweepReport report = unicay::run_sweep(n_min, n_max);
    const std::string text =
        opt.format == "json" ? unicay::sweep_to_json(report).dump() : unicay::sweep_to_table(report);
    emit(opt, text);
    if (!opt.output.empty())
        std::cout << "verify " << n_min << ".." << n_max << ": " << report.passes << " pass, " << report.failures
                  << " fail, " << report.errata << " errata\n";
    return report.all_ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact closed forms and brute-force cross-checks for unitary Cayley graphs X_n"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--output", opt.output, "write output to file");
    app.add_option("--max-n", opt.max_n, "raise the verify sweep ceiling");

    std::int64_t n = 0, n_min = 0, n_max = 0;
    std::string property;

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of X_n with multiplicities");
    spectrum->add_option("n", n)->required()->check(CLI::Range(std::int64_t{1}, kClosedFormLimit));
    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of X_n (factored)");
    charpoly->add_option("n", n)->required()->check(CLI::Range(std::int64_t{1}, kClosedFormLimit));
    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of X_n (factored)");
    minpoly->add_option("n", n)->required()->check(CLI::Range(std::int64_t{1}, kClosedFormLimit));
    auto* det = app.add_subcommand("det", "determinant of the adjacency matrix of X_n");
    det->add_option("n", n)->required()->check(CLI::Range(std::int64_t{1}, kClosedFormLimit));
    auto* check = app.add_subcommand("check", "graph property vs closed-form prediction");
    check->add_option("n", n)->required()->check(CLI::Range(std::int64_t{2}, kOracleLimit));
    check->add_option("property", property)
        ->required()
        ->check(CLI::IsMember({"dr", "srg", "bipartite", "complete", "crown", "singular", "integral"}));
    auto* basis = app.add_subcommand("basis", "disjoint 0/1 basis of the adjacency algebra of X_n");
    basis->add_option("n", n)->required()->check(CLI::Range(std::int64_t{2}, kOracleLimit));
    auto* verify = app.add_subcommand("verify", "run every cross-check over a range of n");
    verify->add_option("n_min", n_min)->required()->check(CLI::Range(std::int64_t{2}, kClosedFormLimit));
    verify->add_option("n_max", n_max)->required()->check(CLI::Range(std::int64_t{2}, kClosedFormLimit));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(opt, n);
        if (charpoly->parsed()) return cmd_charpoly(opt, n);
        if (minpoly->parsed()) return cmd_minpoly(opt, n);
        if (det->parsed()) return cmd_det(opt, n);
        if (check->parsed()) return cmd_check(opt, n, property);
        if (basis->parsed()) return cmd_basis(opt, n);
        if (verify->parsed()) return cmd_verify(opt, n_min, n_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#include "unicay/sweep.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "unicay/coherent.hpp"
#include "unicay/spectra.hpp"

namespace unicay {

namespace {

bool is_prime_power(std::int64_t n) {
    return factorize(n).factors.size() == 1;
}

bool is_two_p(std::int64_t n) {
    const Factorization f = factorize(n);
    return f.factors.size() == 2 && f.factors[0].prime == 2 && f.factors[0].exponent == 1 &&
           f.factors[1].exponent == 1;
}

PerNResult check_one(std::int64_t n) {
    PerNResult r;
    r.n = n;
    const DenseGraph g = materialize(unitary_connection_set(n, n));

    const IntPoly closed = characteristic_polynomial(n);
    r.spectrum_match = oracle_char_poly(g) == closed;

    const BigInt det = determinant_closed(n);
    const BigInt from_charpoly = (n % 2 == 0 ? 1 : -1) * closed.coeff(0);
    r.det_match = det == oracle_determinant(g) && det == from_charpoly;

    const IntPoly minpoly = minimal_polynomial(n);
    const Factorization f = factorize(n);
    const std::int64_t expected_deg = moebius(f) != 0
                                          ? static_cast<std::int64_t>(divisors(f).size())
                                          : static_cast<std::int64_t>(divisors(factorize(radical(f))).size()) + 1;
    r.minpoly_ok = minpoly.degree() == expected_deg && annihilates(minpoly, g);

    r.dr_brute = is_distance_regular(g).has_value();
    r.dr_predicted = is_prime_power(n) || is_two_p(n);
    r.dr_agree = r.dr_brute == r.dr_predicted;

    r.pattern_pass = verify_pattern_polynomial(n).pass;
    r.table1_erratum = !table1_row_consistent(n);
    return r;
}

}  // namespace

SweepReport run_sweep(std::int64_t n_min, std::int64_t n_max) {
    if (n_min < 2 || n_max < n_min) throw std::invalid_argument("run_sweep: need 2 <= n_min <= n_max");
    SweepReport report;
    report.n_min = n_min;
    report.n_max = n_max;
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        PerNResult r = check_one(n);
        if (r.ok())
            ++report.passes;
        else
            ++report.failures;
        if (r.table1_erratum) ++report.errata;
        report.per_n.push_back(std::move(r));
    }
    return report;
}

nlohmann::json sweep_to_json(const SweepReport& r) {
    nlohmann::json per_n = nlohmann::json::array();
    for (const auto& e : r.per_n)
        per_n.push_back({{"n", e.n},
                         {"spectrum_match", e.spectrum_match},
                         {"det_match", e.det_match},
                         {"minpoly_ok", e.minpoly_ok},
                         {"dr_brute", e.dr_brute},
                         {"dr_predicted", e.dr_predicted},
                         {"dr_agree", e.dr_agree},
                         {"pattern_pass", e.pattern_pass},
                         {"table1_erratum", e.table1_erratum}});
    return nlohmann::json{{"range", {r.n_min, r.n_max}},
                          {"per_n", per_n},
                          {"summary", {{"passes", r.passes}, {"failures", r.failures}, {"errata", r.errata}}}};
}

SweepReport sweep_from_json(const nlohmann::json& j) {
    SweepReport r;
    r.n_min = j.at("range").at(0).get<std::int64_t>();
    r.n_max = j.at("range").at(1).get<std::int64_t>();
    for (const auto& e : j.at("per_n")) {
        PerNResult p;
        p.n = e.at("n").get<std::int64_t>();
        p.spectrum_match = e.at("spectrum_match").get<bool>();
        p.det_match = e.at("det_match").get<bool>();
        p.minpoly_ok = e.at("minpoly_ok").get<bool>();
        p.dr_brute = e.at("dr_brute").get<bool>();
        p.dr_predicted = e.at("dr_predicted").get<bool>();
        p.dr_agree = e.at("dr_agree").get<bool>();
        p.pattern_pass = e.at("pattern_pass").get<bool>();
        p.table1_erratum = e.at("table1_erratum").get<bool>();
        r.per_n.push_back(std::move(p));
    }
    r.passes = j.at("summary").at("passes").get<std::int64_t>();
    r.failures = j.at("summary").at("failures").get<std::int64_t>();
    r.errata = j.at("summary").at("errata").get<std::int64_t>();
    return r;
}

std::string sweep_to_table(const SweepReport& r) {
    std::ostringstream os;
    os << "   n  spectrum  det  minpoly  DR(brute/pred)  pattern  table1\n";
    auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
    for (const auto& e : r.per_n) {
        os << std::setw(4) << e.n << "  " << std::setw(8) << mark(e.spectrum_match) << "  " << std::setw(3)
           << mark(e.det_match) << "  " << std::setw(7) << mark(e.minpoly_ok) << "  " << std::setw(7)
           << (e.dr_brute ? "DR" : "-") << "/" << (e.dr_predicted ? "DR" : "-")
           << (e.dr_agree ? "      " : " FAIL ") << "  " << std::setw(7) << mark(e.pattern_pass) << "  "
           << (e.table1_erratum ? "erratum" : "ok") << "\n";
    }
    os << "summary: " << r.passes << " pass, " << r.failures << " fail, " << r.errata
       << " table-1 errata flagged\n";
    return os.str();
}

}  // namespace unicay

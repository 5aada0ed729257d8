#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace unicay {

/// Cross-check results for a single X_n.
struct PerNResult {
    std::int64_t n = 0;
    bool spectrum_match = false;   // oracle char poly == closed-form char poly
    bool det_match = false;        // closed form == Bareiss == +-constant term
    bool minpoly_ok = false;       // annihilates A(X_n), degree as predicted
    bool dr_brute = false;         // combinatorial distance regularity
    bool dr_predicted = false;     // n prime power or n = 2p
    bool dr_agree = false;
    bool pattern_pass = false;     // dim A(X_n) three ways + disjoint basis
    bool table1_erratum = false;   // printed spectrum-table row inconsistent

    bool ok() const { return spectrum_match && det_match && minpoly_ok && dr_agree && pattern_pass; }
    bool operator==(const PerNResult&) const = default;
};

struct SweepReport {
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::vector<PerNResult> per_n;  // ascending, one entry per n
    std::int64_t passes = 0;
    std::int64_t failures = 0;
    std::int64_t errata = 0;

    bool all_ok() const { return failures == 0; }
    bool operator==(const SweepReport&) const = default;
};

/// Runs every cross-check for each n in [n_min, n_max].
SweepReport run_sweep(std::int64_t n_min, std::int64_t n_max);

nlohmann::json sweep_to_json(const SweepReport& r);
SweepReport sweep_from_json(const nlohmann::json& j);
std::string sweep_to_table(const SweepReport& r);

}  // namespace unicay

#include <doctest.h>

#include <nlohmann/json.hpp>

#include "unicay/sweep.hpp"

using namespace unicay;

TEST_CASE("run_sweep on a small range") {
    const SweepReport report = run_sweep(2, 16);
    REQUIRE(report.per_n.size() == 15);
    CHECK(report.failures == 0);
    CHECK(report.passes == 15);
    for (const auto& e : report.per_n) {
        CHECK(e.ok());
        // erratum flagged exactly on the non-square-free n
        const bool square_free = (e.n % 4 != 0) && (e.n % 9 != 0);
        CHECK(e.table1_erratum == !square_free);
    }
    CHECK(report.errata == 5);  // 4, 8, 9, 12, 16
    CHECK_THROWS_AS(run_sweep(1, 4), std::invalid_argument);
}

TEST_CASE("sweep JSON round trip") {
    const SweepReport report = run_sweep(2, 10);
    const nlohmann::json j = sweep_to_json(report);
    CHECK(sweep_from_json(j) == report);
    CHECK(sweep_from_json(nlohmann::json::parse(j.dump())) == report);
    CHECK(j.at("range").at(0) == 2);
    CHECK(j.at("summary").at("failures") == 0);
}

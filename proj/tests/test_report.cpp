#include "qgrass/report.hpp"

#include "doctest.h"

#include <set>

using namespace qgrass;

namespace {

nlohmann::json without_timings(nlohmann::json j)
{
    for (auto& r : j["results"])
        r.erase("elapsed_ms");
    return j;
}

} // namespace

TEST_CASE("registry")
{
    const auto& reg = check_registry();
    CHECK(reg.size() == 55);
    std::set<std::string> suites(suite_names().begin(), suite_names().end());
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(suites.count(reg[i].suite) == 1);
        CHECK_FALSE(reg[i].description.empty());
        if (i > 0)
            CHECK(reg[i - 1].id < reg[i].id);
    }
    CHECK(find_check("rtt.gl") != nullptr);
    CHECK(find_check("no.such.check") == nullptr);
}

TEST_CASE("rtt suite")
{
    const auto results = run_suite("rtt", Options{});
    REQUIRE(results.size() == 3);
    CHECK(results[0].check_id == "rtt.gl");
    CHECK(results[1].check_id == "rtt.gr");
    CHECK(results[2].check_id == "rtt.mixed");
    for (const auto& r : results)
        CHECK(r.status == Status::Pass);
}

TEST_CASE("central suite, including the q^2 commutation of the Berezinian")
{
    const auto results = run_suite("central", Options{});
    CHECK(results.size() == 6);
    for (const auto& r : results) {
        CAPTURE(r.check_id);
        CHECK(r.status == Status::Pass);
        CHECK(r.residual_summary.empty());
    }
}

TEST_CASE("option validation")
{
    CHECK_THROWS_AS(run_suite("nonsense", Options{}), std::invalid_argument);
    for (const Rational& bad : {Rational(0), Rational(1), Rational(-1)})
        CHECK_THROWS_AS(run_suite("rtt", Options{bad, kDefaultFuel}), DomainError);
    CHECK_THROWS_AS(run_suite("rtt", Options{std::nullopt, 0}), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("confluence", Options{std::nullopt, 3}), FuelExhausted);
}

TEST_CASE("report JSON")
{
    const Report rep = make_report("ybe", Options{});
    const nlohmann::json j = to_json(rep);
    CHECK(j["engine_version"] == kEngineVersion);
    CHECK(j["q_mode"] == "symbolic");
    CHECK(j["overall"] == "pass");
    REQUIRE(j["results"].size() == 7);
    for (const auto& r : j["results"]) {
        for (const char* key : {"check_id", "status", "residual_summary", "elapsed_ms", "note"})
            CHECK(r.contains(key));
        CHECK((r["status"] == "pass") == r["residual_summary"].empty());
    }

    // Determinism modulo timings.
    CHECK(without_timings(j).dump() == without_timings(to_json(make_report("ybe", Options{}))).dump());

    const Report numeric = make_report("rtt", Options{Rational(3, 2), kDefaultFuel});
    CHECK(to_json(numeric)["q_mode"] == "numeric(3/2)");
}

TEST_CASE("overall verdict")
{
    Report rep;
    rep.results.push_back({"x", Status::Pass, {}, 0, ""});
    rep.results.push_back({"y", Status::Skipped, {}, 0, ""});
    CHECK(rep.pass());
    rep.results.push_back({"z", Status::Fail, {"(11,11): q"}, 0, ""});
    CHECK_FALSE(rep.pass());
    CHECK(to_json(rep)["overall"] == "fail");
    const std::string text = render_text(rep);
    CHECK(text.find("(11,11): q") != std::string::npos);
}

TEST_CASE("negative controls report their findings in the note")
{
    const auto results = run_suite("inverse", Options{});
    bool seen = false;
    for (const auto& r : results)
        if (r.check_id == "inverse.deltaD-plus-sign-fails") {
            seen = true;
            CHECK(r.status == Status::Pass);
            CHECK_FALSE(r.note.empty());
        }
    CHECK(seen);
}

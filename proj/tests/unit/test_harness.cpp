#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "efb/errors.hpp"
#include "efb/harness.hpp"

using namespace efb;

TEST_CASE("suite passes and is deterministic for small m") {
    for (int m = 1; m <= 3; ++m) {
        const auto a = run_suite(m, 11, 6);
        for (const auto& r : a) {
            INFO(ledger_line(r));
            CHECK(r.passed());
            CHECK(r.witness.is_null());
        }
        CHECK(ledger(a) == ledger(run_suite(m, 11, 6)));
        CHECK(ledger(a) == ledger(run_suite(m, 11, 6, true)));
        CHECK(ledger(a) != ledger(run_suite(m, 12, 6)));
    }
}

TEST_CASE("ledger has one line per check and covers every claim") {
    const auto res = run_suite(1, 3, 2);
    const auto names = check_names();
    REQUIRE(res.size() == names.size());
    std::set<std::string> covered;
    for (std::size_t i = 0; i < res.size(); ++i) {
        CHECK(res[i].name == names[i]);
        covered.insert(res[i].covers);
        auto j = nlohmann::json::parse(ledger_line(res[i]));
        CHECK(j["check"] == names[i]);
        CHECK(j.contains("witness") == !res[i].passed());
    }
    for (const auto& c : required_claims()) CHECK(covered.count(c) == 1);
    CHECK(res.back().name == "coverage");
    bool exhaustive = false;
    for (const auto& r : res) exhaustive = exhaustive || r.exhaustive;
    CHECK(exhaustive);
}

TEST_CASE("m = 2 skips the trivial-annihilator check") {
    for (const auto& r : run_suite(2, 5, 3))
        if (r.name == "generic_trivial_annihilator") CHECK(r.skipped);
}

TEST_CASE("range") {
    CHECK_THROWS_AS(run_suite(0, 1, 1), RangeError);
    CHECK_THROWS_AS(run_suite(7, 1, 1), RangeError);
}

TEST_CASE("single check matches its suite entry") {
    const auto suite = run_suite(2, 4, 3);
    for (const auto& r : suite) {
        if (r.name == "coverage") continue;
        CHECK(ledger_line(run_check(r.name, 2, 4, 3)) == ledger_line(r));
    }
    CHECK_THROWS_AS(run_check("no_such_check", 2, 1, 1), RangeError);
}

#include "cantorgap/report.hpp"
#include "doctest.h"

using namespace cantorgap;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

VerifyOptions at(int n) {
    VerifyOptions o;
    o.max_stage = n;
    return o;
}

}  // namespace

TEST_CASE("ccp on the ternary set lists the theorem points") {
    const Verdict v = verify("ccp", FamilySpec::ternary(), at(8));
    CHECK(v.passed());
    CHECK_FALSE(v.flagged());
    const auto pts = v.payload["points"];
    CHECK(std::find(pts.begin(), pts.end(), "26/27") != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), "-8/9") != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), "0/1") != pts.end());
    CHECK(v.to_json()["status"] == "pass");
}

TEST_CASE("selectors reject incompatible families") {
    CHECK_THROWS_WITH_AS(verify("t13", FamilySpec::central_constant(q(1, 4)), at(4)),
                         doctest::Contains("requires a ∈ [1/3,1)"), IncompatibleSelector);
    CHECK_THROWS_AS(verify("ts3", FamilySpec::ternary(), at(4)), IncompatibleSelector);
    CHECK_THROWS_AS(verify("tab", FamilySpec::ternary(), at(4)), IncompatibleSelector);
    CHECK_THROWS_AS(verify("cspm", FamilySpec::tab_builtin(), at(4)), IncompatibleSelector);
    CHECK_THROWS_AS(verify("tamc", FamilySpec::perturbed_default(), at(4)), IncompatibleSelector);
    CHECK_THROWS_AS(verify("nope", FamilySpec::ternary(), at(4)), IncompatibleSelector);
}

TEST_CASE("every compatible suite passes on the built-in families at n = 6") {
    for (const auto& [name, spec] : builtin_families()) {
        for (const auto& sel : verify_selectors()) {
            CAPTURE(name);
            CAPTURE(sel);
            try {
                const Verdict v = verify(sel, spec, at(6));
                CHECK(v.passed());
            } catch (const IncompatibleSelector&) {
            }
        }
    }
}

TEST_CASE("tab certificate covers every stage") {
    const Verdict v = verify("tab", FamilySpec::tab_builtin(), at(5));
    CHECK(v.passed());
    CHECK(v.payload["ls_certificate"]["n_checked"] == 5);
}

TEST_CASE("tamc fails cleanly when the budget is too small") {
    VerifyOptions o = at(6);
    o.budget = Budget{8};
    const Verdict v = verify("tamc", FamilySpec::ternary(), o);
    CHECK_FALSE(v.passed());
    CHECK(v.assertions.front().detail.contains("stage"));
}

TEST_CASE("ts3 strip width") {
    const PerturbedSpec p;
    CHECK(ts3_strip_width(p, 1) == q(1));
    CHECK(ts3_strip_width(p, 3) == q(2, 5));
    for (int n = 3; n <= 8; ++n) CHECK(ts3_strip_width(p, n + 1) < ts3_strip_width(p, n));
}

TEST_CASE("fat measure lower bound") {
    const GreedySpec g;
    const auto lb = fat_measure_lower_bound(g.b, 8);
    REQUIRE(lb.has_value());
    CHECK(q(34, 100) < *lb);
    // never above the stage measure
    for (int n = 0; n <= 8; ++n) CHECK_FALSE(measure(g.b.stage(n).components) < *fat_measure_lower_bound(g.b, n));
    CHECK_FALSE(fat_measure_lower_bound(CompositeSpec::builtin().b, 8).has_value());
}

TEST_CASE("isolated zero") {
    const CantorStage s = central_stage(CentralSpec::constant(q(1, 3)), 3);
    CHECK(isolated_zero_holds(s, inner_diff(s)).value());
    CHECK_FALSE(isolated_zero_holds(central_stage(CentralSpec::constant(q(1, 3)), 0), {}).has_value());
}

TEST_CASE("measure scan") {
    const auto rows = measure_scan(FamilySpec::ternary(), 4);
    REQUIRE(rows.size() == 5);
    CHECK(rows[2].set_measure == q(4, 9));
    CHECK(rows[2].components == 4);
    CHECK(rows[2].missing_total == q(2, 9));
    CHECK(rows[4].missing_central == q(0));
}

TEST_CASE("verdicts are deterministic") {
    for (const char* sel : {"ccp", "t13", "tamc", "steinhaus"}) {
        CHECK(verify(sel, FamilySpec::ternary(), at(6)).to_json().dump() ==
              verify(sel, FamilySpec::ternary(), at(6)).to_json().dump());
    }
    CHECK(verify("cspm", FamilySpec::greedy_default(), at(4)).to_json().dump() ==
          verify("cspm", FamilySpec::greedy_default(), at(4)).to_json().dump());
}

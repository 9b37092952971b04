#include "cantorgap/family.hpp"
#include "cantorgap/json_io.hpp"
#include "doctest.h"

using namespace cantorgap;
using nlohmann::json;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

std::string error_of(const std::string& text) {
    try {
        parse_family_spec(text);
    } catch (const SpecError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse central specs") {
    const FamilySpec a = parse_family_spec(R"({"family": "central", "ratio": "1/3"})");
    CHECK(a.family == Family::Central);
    CHECK(a.central.ratio(5) == q(1, 3));
    const FamilySpec b =
        parse_family_spec(R"({"family": "central", "ratios": {"kind": "list", "prefix": ["1/2", "2/5"], "tail": "1/3"}})");
    CHECK(b.central.ratio(2) == q(2, 5));
    CHECK(b.central.ratio(3) == q(1, 3));
    const FamilySpec c =
        parse_family_spec(R"({"family": "central", "ratios": {"kind": "geometric", "first": "1/4", "factor": "1/2"}})");
    CHECK(c.central.ratio(3) == q(1, 16));
    CHECK_THROWS_AS(parse_family_spec(R"({"family": "central", "ratio": 1})"), SpecError);
    CHECK(parse_family_spec(R"({"family": "greedy", "margin_base": "1/8"})").greedy.margin_base == q(1, 8));
}

TEST_CASE("spec errors carry line numbers") {
    const std::string bad_ratio = "{\n  \"family\": \"central\",\n  \"ratio\": \"1/1\"\n}";
    const std::string msg = error_of(bad_ratio);
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("ratio out of (0,1)") != std::string::npos);

    const std::string unknown = "{\n  \"family\": \"perturbed\",\n  \"c1\": \"1/5\",\n  \"rho\": \"1/2\"\n}";
    const std::string m2 = error_of(unknown);
    CHECK(m2.find("line 4") != std::string::npos);
    CHECK(m2.find("unknown key \"rho\"") != std::string::npos);

    CHECK(error_of(R"({"family": "central", "ratio": 0.5})").find("\"p/q\"") != std::string::npos);
    CHECK(error_of(R"({"family": "spiral"})") != "");
    CHECK(error_of(R"({"family": "central",)") != "");
    CHECK(error_of(R"({"family": "tab", "a": {"ratio": "1/2", "scale": "1/3"}})") != "");
    CHECK(error_of(R"({"family": "perturbed", "c1": "4/5"})") != "");
}

TEST_CASE("spec round trip") {
    for (const auto& [name, spec] : builtin_families()) {
        CAPTURE(name);
        const json j = family_to_json(spec);
        const FamilySpec back = parse_family_spec(j.dump());
        CHECK(family_to_json(back) == j);
        CHECK(back.stage(3).components == spec.stage(3).components);
    }
}

TEST_CASE("rational json") {
    CHECK(rational_from_json(json("3/6")) == q(1, 2));
    CHECK(rational_from_json(json(2)) == q(2));
    CHECK_THROWS_AS(rational_from_json(json(0.25)), SpecError);
}

TEST_CASE("interval json round trip") {
    const IntervalUnion u{Interval(q(0), q(1, 3), true, false), Interval::point(q(1, 2)), Interval::open(q(2, 3), q(1))};
    const json j = to_json(u);
    CHECK(j[0]["lo"] == "0/1");
    CHECK(j[0]["hi_closed"] == false);
    CHECK(union_from_json(j) == u);
    const json s = split_json(u);
    CHECK(s["points"] == json::array({"1/2"}));
    CHECK(s["intervals"].size() == 2);
}

TEST_CASE("gap table") {
    const CantorStage s2 = central_stage(CentralSpec::constant(q(1, 3)), 2);
    const auto rows = gap_table(s2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].address == "ε");
    CHECK(rows[0].lo == q(1, 3));
    CHECK(rows[0].hi == q(2, 3));
    CHECK(rows[0].stage_created == 1);
    CHECK(rows[1].address == "0");
    CHECK(rows[1].lo == q(1, 9));
    CHECK(rows[1].stage_created == 2);
    CHECK(rows[2].address == "1");
    CHECK(rows[2].hi == q(8, 9));

    const auto p1 = gap_table(perturbed_stage(PerturbedSpec{}, 1));
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].lo == q(2, 5));
    CHECK(p1[0].hi == q(3, 5));
}

TEST_CASE("stage json") {
    const json j = to_json(central_stage(CentralSpec::constant(q(1, 3)), 1));
    CHECK(j["family"] == "central");
    CHECK(j["measure"] == "2/3");
    CHECK(j["addresses"] == json::array({"0", "1"}));
    CHECK(j["endpoints"] == json::array({"0/1", "1/3", "2/3", "1/1"}));
}

#include "cantorgap/cantor.hpp"
#include "cantorgap/family.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cantorgap;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }
Interval cl(Rational a, Rational b) { return Interval::closed(std::move(a), std::move(b)); }

const CentralSpec third = CentralSpec::constant(Rational(1, 3));
const CentralSpec half = CentralSpec::constant(Rational(1, 2));

Rational gap_total(const CantorStage& s) {
    Rational t;
    for (const auto& g : s.gaps) t += g.interval.length();
    return t;
}

}  // namespace

TEST_CASE("central stage examples") {
    const CantorStage s1 = central_stage(third, 1);
    CHECK(s1.components == IntervalUnion{cl(q(0), q(1, 3)), cl(q(2, 3), q(1))});
    REQUIRE(s1.gaps.size() == 1);
    CHECK(s1.gaps[0].interval == Interval::open(q(1, 3), q(2, 3)));
    CHECK(s1.gaps[0].address.label() == "ε");

    const CantorStage s2 = central_stage(third, 2);
    for (const auto& c : s2.components) CHECK(c.length() == q(1, 9));
    CHECK(s2.find_gap(NodeAddress("0"))->interval.length() == q(1, 9));
    CHECK(s2.find_gap(NodeAddress("1"))->interval.length() == q(1, 9));
    CHECK(s2.find_gap(NodeAddress("0"))->stage_created == 2);

    CHECK(central_stage(half, 1).components == IntervalUnion{cl(q(0), q(1, 4)), cl(q(3, 4), q(1))});
}

TEST_CASE("central stage matches an independent construction") {
    for (const Rational a : {q(1, 3), q(1, 2), q(2, 5)}) {
        for (int n = 0; n <= 6; ++n) {
            const auto want = oracle::central_components(a, n);
            const CantorStage s = central_stage(CentralSpec::constant(a), n);
            REQUIRE(s.components.size() == want.size());
            for (std::size_t i = 0; i < want.size(); ++i) {
                CHECK(s.components[i] == cl(want[i].first, want[i].second));
            }
        }
    }
}

TEST_CASE("central ratio rules") {
    const CentralSpec list = CentralSpec::list({q(1, 2), q(1, 3)}, q(1, 4));
    CHECK(list.ratio(1) == q(1, 2));
    CHECK(list.ratio(2) == q(1, 3));
    CHECK(list.ratio(7) == q(1, 4));
    const CentralSpec geo = CentralSpec::geometric(q(1, 4), q(1, 4));
    CHECK(geo.ratio(3) == q(1, 64));
    CHECK_FALSE(geo.all_ratios_at_least(q(1, 3)));
    CHECK(half.all_ratios_at_least(q(1, 3)));
    CHECK_THROWS_WITH_AS(CentralSpec::constant(q(1)).validate(), doctest::Contains("ratio out of (0,1)"), SpecError);
    CHECK_THROWS_AS(CentralSpec::list({q(0)}, q(1, 3)).validate(), SpecError);
}

TEST_CASE("central_r_P") {
    CHECK(central_r_P(third, 0) == q(2, 3));
    CHECK(central_r_P(third, 2) == q(26, 27));
    CHECK(central_r_P(half, 0) == q(3, 4));
    // read-off: r(P) is the left end of the right stage-1 component
    CHECK(central_r_P(half, 0) == central_stage(half, 1).components[1].lo());
}

TEST_CASE("lbrick shift") {
    CHECK(lbrick_shift(central_stage(third, 2), NodeAddress("1")) == q(2, 3));
    CHECK(lbrick_shift(central_stage(third, 2), NodeAddress("11")) == q(8, 9));
    CHECK(lbrick_shift(central_stage(half, 2), NodeAddress("1")) == q(3, 4));
    CHECK_THROWS_AS(lbrick_shift(central_stage(third, 1), NodeAddress("11")), std::invalid_argument);
    CHECK_THROWS_AS(lbrick_shift(perturbed_stage(PerturbedSpec{}, 2), NodeAddress("1")), std::invalid_argument);
}

TEST_CASE("perturbed stage examples") {
    const PerturbedSpec spec;
    CHECK(perturbed_stage(spec, 1).components == IntervalUnion{cl(q(0), q(2, 5)), cl(q(3, 5), q(1))});
    const CantorStage s2 = perturbed_stage(spec, 2);
    CHECK(s2.find_gap(NodeAddress("0"))->interval == Interval::open(q(1, 5), q(3, 10)));
    CHECK(s2.find_gap(NodeAddress("1"))->interval == Interval::open(q(7, 10), q(4, 5)));
    const auto c = perturbed_gap_lengths(spec, 3);
    CHECK(c[0] == q(1, 5));
    CHECK(c[1] == q(1, 10));
    PerturbedSpec bad;
    bad.c1 = q(1);
    CHECK_THROWS_AS(bad.validate(), SpecError);
}

TEST_CASE("perturbed key properties") {
    const PerturbedSpec spec;
    for (int n = 1; n <= 8; ++n) {
        const CantorStage s = perturbed_stage(spec, n);
        const auto zeros = NodeAddress::repeat('0', static_cast<std::size_t>(n));
        const auto ones = NodeAddress::repeat('1', static_cast<std::size_t>(n));
        CHECK(s.components[*s.component_index(zeros)].length() == s.components[*s.component_index(ones)].length());
        const auto* g0 = s.find_gap(NodeAddress::repeat('0', static_cast<std::size_t>(n - 1)));
        const auto* g1 = s.find_gap(NodeAddress::repeat('1', static_cast<std::size_t>(n - 1)));
        CHECK(g0->interval.length() == g1->interval.length());
        for (const auto& h : s.gaps) {
            if (h.interval.hi() <= g0->interval.lo()) CHECK(h.interval.length() < g0->interval.length());
        }
    }
}

TEST_CASE("tab stage examples") {
    const CompositeSpec spec = CompositeSpec::builtin();
    const CantorStage s1 = tab_stage(spec, 1);
    CHECK(s1.components == IntervalUnion{cl(q(0), q(1, 8)), cl(q(3, 8), q(3, 4)), cl(q(7, 8), q(1))});
    const CantorStage s2 = tab_stage(spec, 2);
    CHECK(s2.components.size() <= 4 + 9);
    for (int n = 0; n <= 6; ++n) CHECK(contains_point(tab_stage(spec, n).components, q(1)));
}

TEST_CASE("stage invariants hold for every built-in family") {
    for (const auto& [name, spec] : builtin_families()) {
        CAPTURE(name);
        CantorStage prev = spec.stage(0);
        for (int n = 1; n <= 7; ++n) {
            const CantorStage s = spec.stage(n);
            CHECK(is_subset(s.components, prev.components));
            for (const auto& g : prev.gaps) {
                CHECK(std::find_if(s.gaps.begin(), s.gaps.end(), [&](const GapRecord& h) {
                          return h.interval == g.interval && h.stage_created == g.stage_created;
                      }) != s.gaps.end());
            }
            CHECK(measure(s.components) + gap_total(s) == q(1));
            CHECK(set_union(s.components, s.gap_union()) == IntervalUnion(cl(q(0), q(1))));
            for (const auto& c : s.components) CHECK((c.lo_closed() && c.hi_closed()));
            CHECK(contains_point(s.components, q(0)));
            CHECK(contains_point(s.components, q(1)));
            CHECK(max_component_length(s.components) < q(1));
            CHECK_FALSE(max_component_length(prev.components) < max_component_length(s.components));
            if (s.is_tree()) {
                CHECK(s.components.size() == (std::size_t{1} << n));
                CHECK(s.endpoints.size() == (std::size_t{2} << n));
            }
            prev = s;
        }
    }
}

TEST_CASE("central symmetry") {
    for (const auto& spec : {third, half, CentralSpec::list({q(1, 2)}, q(1, 3))}) {
        for (int n = 0; n <= 6; ++n) {
            const IntervalUnion c = central_stage(spec, n).components;
            CHECK(translate(reflect(c), q(1)) == c);
        }
    }
}

TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(central_stage(third, 15, Budget{1u << 14}), BudgetExceeded);
    CHECK_NOTHROW(central_stage(third, 14, Budget{1u << 14}));
}

TEST_CASE("dyadic enumeration is breadth first") {
    DyadicEnumerator e(q(0), q(1));
    std::vector<Rational> got;
    for (int i = 0; i < 6; ++i) got.push_back(e.next());
    CHECK(got == std::vector<Rational>{q(0), q(1), q(1, 2), q(1, 4), q(3, 4), q(1, 8)});
}

TEST_CASE("greedy stage") {
    const GreedySpec spec;
    const GreedyStage g0 = greedy_stage(spec, 0);
    CHECK(g0.a.components == IntervalUnion(cl(q(0), q(1, 2))));
    Rational prev_b = q(1);
    for (int n = 1; n <= 6; ++n) {
        const GreedyStage g = greedy_stage(spec, n);
        CHECK(g.certificate_holds);
        const IntervalUnion sum = minkowski_sum(g.a.components, g.b.components);
        for (const auto& d : g.avoided) CHECK_FALSE(contains_point(sum, d));
        for (const auto& d : g.avoided) {
            CHECK_FALSE(contains_point(g.b.components, d));
            CHECK_FALSE(contains_point(translate(g.b.components, q(1, 2)), d));
        }
        CHECK(contains_point(g.a.components, q(0)));
        CHECK(contains_point(g.a.components, q(1, 2)));
        // fat B: m(B_n) >= (1/2) prod (1 - 4^-j)
        Rational bound = q(1, 2);
        for (int j = 1; j <= n; ++j) bound *= q(1) - pow(q(1, 4), static_cast<unsigned>(j));
        CHECK_FALSE(measure(g.b.components) < bound);
        CHECK_FALSE(prev_b < measure(g.b.components));
        prev_b = measure(g.b.components);
    }
}

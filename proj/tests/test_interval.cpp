#include <random>

#include "cantorgap/interval.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cantorgap;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }
Interval cl(Rational a, Rational b) { return Interval::closed(std::move(a), std::move(b)); }
Interval op(Rational a, Rational b) { return Interval::open(std::move(a), std::move(b)); }
Interval pt(Rational a) { return Interval::point(a); }

}  // namespace

TEST_CASE("interval rejects empty bounds") {
    CHECK_THROWS_AS(Interval(q(1), q(0), true, true), std::invalid_argument);
    CHECK_THROWS_AS(Interval(q(1), q(1), true, false), std::invalid_argument);
    CHECK(pt(q(1, 2)).is_point());
}

TEST_CASE("normalize examples") {
    CHECK(normalize({cl(q(0), q(1, 3)), cl(q(1, 3), q(1))}) == IntervalUnion(cl(q(0), q(1))));
    const IntervalUnion punct = normalize({op(q(0), q(1, 3)), op(q(1, 3), q(1))});
    CHECK(punct.size() == 2);
    CHECK_FALSE(contains_point(punct, q(1, 3)));
    CHECK(normalize({cl(q(2, 3), q(1)), cl(q(0), q(1, 3))}) == IntervalUnion{cl(q(0), q(1, 3)), cl(q(2, 3), q(1))});
    // closed end meeting an open end merges
    CHECK(normalize({cl(q(0), q(1, 2)), op(q(1, 2), q(1))}) == IntervalUnion(Interval(q(0), q(1), true, false)));
    CHECK(normalize({op(q(0), q(1)), pt(q(1))}) == IntervalUnion(Interval(q(0), q(1), false, true)));
}

TEST_CASE("boolean examples") {
    const IntervalUnion ternary1{cl(q(0), q(1, 3)), cl(q(2, 3), q(1))};
    CHECK(complement_within(ternary1, cl(q(0), q(1))) == IntervalUnion(op(q(1, 3), q(2, 3))));
    CHECK(intersect(IntervalUnion{cl(q(1, 2), q(3, 4)), cl(q(7, 8), q(9, 8))}, IntervalUnion(cl(q(1, 2), q(1)))) ==
          IntervalUnion{cl(q(1, 2), q(3, 4)), cl(q(7, 8), q(1))});
    const IntervalUnion inner1{op(q(-2, 3), q(-1, 3)), op(q(-1, 3), q(0)), op(q(0), q(1, 3)), op(q(1, 3), q(2, 3))};
    CHECK(set_difference(IntervalUnion(cl(q(-1), q(1))), inner1) ==
          IntervalUnion{cl(q(-1), q(-2, 3)), pt(q(-1, 3)), pt(q(0)), pt(q(1, 3)), cl(q(2, 3), q(1))});
}

TEST_CASE("minkowski examples") {
    CHECK(minkowski_sum(IntervalUnion(cl(q(0), q(1, 3))), IntervalUnion(cl(q(2, 3), q(1)))) ==
          IntervalUnion(cl(q(2, 3), q(4, 3))));
    CHECK(minkowski_sum(IntervalUnion(op(q(1, 3), q(2, 3))), IntervalUnion(pt(q(-1, 3)))) ==
          IntervalUnion(op(q(0), q(1, 3))));
    const IntervalUnion half{cl(q(0), q(1, 8)), cl(q(3, 8), q(1, 2))};
    CHECK(minkowski_sum(half, half) == IntervalUnion{cl(q(0), q(1, 4)), cl(q(3, 8), q(5, 8)), cl(q(3, 4), q(1))});
    // attained only when both ends are attained
    CHECK(minkowski_sum(IntervalUnion(Interval(q(0), q(1), true, false)), IntervalUnion(cl(q(0), q(1)))) ==
          IntervalUnion(Interval(q(0), q(2), true, false)));
}

TEST_CASE("reflect, translate, scale examples") {
    CHECK(reflect(IntervalUnion(cl(q(0), q(1)))) == IntervalUnion(cl(q(-1), q(0))));
    CHECK(reflect(IntervalUnion(op(q(1, 3), q(2, 3)))) == IntervalUnion(op(q(-2, 3), q(-1, 3))));
    CHECK(reflect(IntervalUnion{pt(q(0)), Interval(q(1, 2), q(1), false, true)}) ==
          IntervalUnion{Interval(q(-1), q(-1, 2), true, false), pt(q(0))});
    const IntervalUnion a{cl(q(0), q(1, 4)), cl(q(3, 4), q(1))};
    CHECK(translate(a, q(3, 4)) == IntervalUnion{cl(q(3, 4), q(1)), cl(q(3, 2), q(7, 4))});
    CHECK(scale(a, q(1, 2)) == IntervalUnion{cl(q(0), q(1, 8)), cl(q(3, 8), q(1, 2))});
    CHECK(translate(a, q(0)) == a);
    CHECK_THROWS_AS(scale(a, q(0)), std::invalid_argument);
    CHECK(scale(a, q(-1)) == reflect(a));
}

TEST_CASE("measure and queries") {
    CHECK(measure(IntervalUnion{cl(q(0), q(1, 3)), cl(q(2, 3), q(1))}) == q(2, 3));
    const IntervalUnion punctured{op(q(-2, 3), q(0)), op(q(0), q(2, 3))};
    CHECK_FALSE(contains_point(punctured, q(0)));
    CHECK(contains_point(punctured, q(1, 2)));
    CHECK(max_component_length(IntervalUnion{}) == q(0));
    CHECK(max_component_length(punctured) == q(2, 3));
    CHECK(is_subset(IntervalUnion(pt(q(1, 3))), IntervalUnion(cl(q(0), q(1)))));
    CHECK_FALSE(is_subset(IntervalUnion(cl(q(0), q(1))), punctured));
    CHECK(point_part_count(IntervalUnion{pt(q(0)), cl(q(1), q(2)), pt(q(3))}) == 2);
}

TEST_CASE("random unions agree with the brute-force oracle") {
    std::mt19937 rng(20261019);
    for (int trial = 0; trial < 400; ++trial) {
        const auto raw_a = oracle::random_raw(rng, 12, 64);
        const auto raw_b = oracle::random_raw(rng, 12, 64);
        const IntervalUnion a = normalize(raw_a);
        const IntervalUnion b = normalize(raw_b);
        std::vector<oracle::Piece> ra, rb;
        for (const auto& p : raw_a) ra.push_back({p.lo(), p.hi(), p.lo_closed(), p.hi_closed()});
        for (const auto& p : raw_b) rb.push_back({p.lo(), p.hi(), p.lo_closed(), p.hi_closed()});
        std::vector<Rational> crit;
        oracle::add_ends(crit, ra);
        oracle::add_ends(crit, rb);
        const auto in_a = [&](const Rational& x) { return oracle::member(ra, x); };
        const auto in_b = [&](const Rational& x) { return oracle::member(rb, x); };

        REQUIRE(oracle::agrees(a, crit, in_a));
        CHECK(oracle::agrees(set_union(a, b), crit, [&](const Rational& x) { return in_a(x) || in_b(x); }));
        CHECK(oracle::agrees(intersect(a, b), crit, [&](const Rational& x) { return in_a(x) && in_b(x); }));
        CHECK(oracle::agrees(set_difference(a, b), crit, [&](const Rational& x) { return in_a(x) && !in_b(x); }));

        std::vector<Rational> sums;
        for (const auto& p : ra) {
            for (const auto& s : rb) {
                sums.push_back(p.lo + s.lo);
                sums.push_back(p.hi + s.hi);
            }
        }
        const IntervalUnion sum = minkowski_sum(a, b);
        CHECK(oracle::agrees(sum, sums, [&](const Rational& x) { return oracle::sum_member(ra, rb, x); }));
        CHECK(minkowski_sum(b, a) == sum);
        CHECK(measure(sum) == oracle::measure_of(sums, [&](const Rational& x) { return oracle::sum_member(ra, rb, x); }));
        const Interval frame(q(-1, 2), q(3, 2), trial % 2 == 0, trial % 3 == 0);
        CHECK(minkowski_sum_within(a, b, frame) == intersect(sum, IntervalUnion(frame)));

        CHECK(measure(set_union(a, b)) + measure(intersect(a, b)) == measure(a) + measure(b));
        CHECK(is_subset(intersect(a, b), a));
        CHECK(normalize(a.parts()) == a);
    }
}

TEST_CASE("minkowski algebraic laws") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const IntervalUnion a = normalize(oracle::random_raw(rng, 6, 16));
        const IntervalUnion b = normalize(oracle::random_raw(rng, 6, 16));
        const IntervalUnion c = normalize(oracle::random_raw(rng, 6, 16));
        CHECK(minkowski_sum(set_union(a, b), c) == set_union(minkowski_sum(a, c), minkowski_sum(b, c)));
        const Rational t = Rational(static_cast<std::int64_t>(rng() % 17) - 8, 8);
        CHECK(translate(a, t) == minkowski_sum(a, IntervalUnion(Interval::point(t))));
        CHECK(measure(minkowski_sum(a, IntervalUnion(Interval::point(t)))) == measure(a));
        const Interval hull = Interval::closed(q(-3), q(3));
        CHECK(set_difference(a, b) == intersect(a, complement_within(b, hull)));
        CHECK(reflect(reflect(a)) == a);
    }
}

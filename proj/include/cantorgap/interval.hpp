#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cantorgap/rational.hpp"

namespace cantorgap {

// Bounded interval with per-endpoint openness. Either lo < hi, or lo == hi
// with both ends closed (a single point). The empty interval is not
// representable; emptiness lives at the union level.
class Interval {
public:
    // Throws std::invalid_argument if the bounds describe an empty set.
    Interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed);

    static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
    static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
    static Interval point(const Rational& x) { return {x, x, true, true}; }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }

    Rational center() const { return (lo_ + hi_) / Rational(2); }
    Rational length() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& x) const;

    std::string str() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational lo_;
    Rational hi_;
    bool lo_closed_;
    bool hi_closed_;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

// Finite union of intervals in canonical form: parts sorted by lo, pairwise
// disjoint, and never mergeable. Two parts may share an endpoint only when
// both facing ends are open (a puncture).
class IntervalUnion {
public:
    IntervalUnion() = default;
    IntervalUnion(const Interval& single);  // NOLINT: a lone interval is a union
    IntervalUnion(std::initializer_list<Interval> raw);

    const std::vector<Interval>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    const Interval& operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    std::string str() const;

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

    // Wraps parts that are already canonical. Checked in debug builds.
    static IntervalUnion from_canonical(std::vector<Interval> parts);
    bool is_canonical() const;

private:
    std::vector<Interval> parts_;
};

std::ostream& operator<<(std::ostream& os, const IntervalUnion& u);

// Incremental canonicalizer. Intervals must be pushed in non-decreasing
// order of lo, with closed-lo before open-lo on ties.
class UnionBuilder {
public:
    void push(const Interval& iv);
    IntervalUnion finish() &&;

private:
    std::vector<Interval> done_;
    bool has_current_ = false;
    Rational lo_, hi_;
    bool lo_closed_ = false;
    bool hi_closed_ = false;
};

// Order used by UnionBuilder: by lo, closed-lo first.
bool lo_order(const Interval& a, const Interval& b);

IntervalUnion normalize(std::vector<Interval> raw);

IntervalUnion set_union(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion set_difference(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion complement_within(const IntervalUnion& a, const Interval& frame);

// {x + y : x in a, y in b}. An endpoint of a pairwise sum is attained iff
// both contributing endpoints are attained.
IntervalUnion minkowski_sum(const IntervalUnion& a, const IntervalUnion& b);
// (a ⊕ b) ∩ frame, by eroding the complement. Fast when the sum is nearly all of frame.
IntervalUnion minkowski_sum_within(const IntervalUnion& a, const IntervalUnion& b, const Interval& frame);
IntervalUnion reflect(const IntervalUnion& a);
IntervalUnion translate(const IntervalUnion& a, const Rational& t);
// Throws std::invalid_argument for k == 0.
IntervalUnion scale(const IntervalUnion& a, const Rational& k);

// Union of isolated points.
IntervalUnion points(std::span<const Rational> xs);

Rational measure(const IntervalUnion& a);
Rational max_component_length(const IntervalUnion& a);
bool contains_point(const IntervalUnion& a, const Rational& x);
bool is_subset(const IntervalUnion& a, const IntervalUnion& b);

// Degenerate parts and proper-interval parts, listed separately.
std::vector<Rational> point_parts(const IntervalUnion& a);
std::size_t point_part_count(const IntervalUnion& a);

}  // namespace cantorgap

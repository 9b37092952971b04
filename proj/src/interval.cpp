#include "cantorgap/interval.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace cantorgap {

Interval::Interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (hi_ < lo_ || (lo_ == hi_ && !(lo_closed_ && hi_closed_))) {
        throw std::invalid_argument("empty interval " + str());
    }
}

bool Interval::contains(const Rational& x) const {
    const auto lo_cmp = x <=> lo_;
    if (lo_cmp < 0 || (lo_cmp == 0 && !lo_closed_)) return false;
    const auto hi_cmp = x <=> hi_;
    return hi_cmp < 0 || (hi_cmp == 0 && hi_closed_);
}

std::string Interval::str() const {
    if (lo_ == hi_ && lo_closed_ && hi_closed_) return "{" + lo_.str() + "}";
    return std::string(lo_closed_ ? "[" : "(") + lo_.str() + ", " + hi_.str() + (hi_closed_ ? "]" : ")");
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << iv.str(); }

bool lo_order(const Interval& a, const Interval& b) {
    const auto c = a.lo() <=> b.lo();
    if (c != 0) return c < 0;
    return a.lo_closed() && !b.lo_closed();
}

void UnionBuilder::push(const Interval& iv) {
    if (!has_current_) {
        lo_ = iv.lo();
        hi_ = iv.hi();
        lo_closed_ = iv.lo_closed();
        hi_closed_ = iv.hi_closed();
        has_current_ = true;
        return;
    }
    assert(!(iv.lo() < lo_));
    const auto c = iv.lo() <=> hi_;
    const bool overlaps = c < 0;
    const bool touches = c == 0 && (hi_closed_ || iv.lo_closed());
    if (overlaps || touches) {
        if (iv.lo() == lo_) lo_closed_ = lo_closed_ || iv.lo_closed();
        const auto h = iv.hi() <=> hi_;
        if (h > 0) {
            hi_ = iv.hi();
            hi_closed_ = iv.hi_closed();
        } else if (h == 0) {
            hi_closed_ = hi_closed_ || iv.hi_closed();
        }
        return;
    }
    done_.emplace_back(lo_, hi_, lo_closed_, hi_closed_);
    lo_ = iv.lo();
    hi_ = iv.hi();
    lo_closed_ = iv.lo_closed();
    hi_closed_ = iv.hi_closed();
}

IntervalUnion UnionBuilder::finish() && {
    if (has_current_) done_.emplace_back(lo_, hi_, lo_closed_, hi_closed_);
    has_current_ = false;
    return IntervalUnion::from_canonical(std::move(done_));
}

IntervalUnion::IntervalUnion(const Interval& single) : parts_{single} {}

IntervalUnion::IntervalUnion(std::initializer_list<Interval> raw)
    : parts_(normalize(std::vector<Interval>(raw)).parts_) {}

IntervalUnion IntervalUnion::from_canonical(std::vector<Interval> parts) {
    IntervalUnion u;
    u.parts_ = std::move(parts);
    assert(u.is_canonical());
    return u;
}

bool IntervalUnion::is_canonical() const {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        const Interval& p = parts_[i - 1];
        const Interval& q = parts_[i];
        const auto c = p.hi() <=> q.lo();
        if (c > 0) return false;
        if (c == 0 && (p.hi_closed() || q.lo_closed())) return false;
    }
    return true;
}

std::string IntervalUnion::str() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += " U ";
        out += parts_[i].str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntervalUnion& u) { return os << u.str(); }

IntervalUnion normalize(std::vector<Interval> raw) {
    std::sort(raw.begin(), raw.end(), lo_order);
    UnionBuilder builder;
    for (const auto& iv : raw) builder.push(iv);
    return std::move(builder).finish();
}

namespace {

// Index of the last part whose lo is <= x, or npos.
std::size_t last_part_at_or_before(const IntervalUnion& u, const Rational& x) {
    const auto& ps = u.parts();
    auto it = std::upper_bound(ps.begin(), ps.end(), x,
                               [](const Rational& v, const Interval& p) { return v < p.lo(); });
    if (it == ps.begin()) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(std::distance(ps.begin(), it)) - 1;
}

// Whether the open segment (x, next breakpoint) lies in u, given that no
// endpoint of u falls strictly inside the segment.
bool segment_member(const IntervalUnion& u, const Rational& x) {
    const std::size_t i = last_part_at_or_before(u, x);
    if (i == static_cast<std::size_t>(-1)) return false;
    return x < u[i].hi();
}

enum class BoolOp { Union, Intersect, Difference };

bool apply(BoolOp op, bool in_a, bool in_b) {
    switch (op) {
        case BoolOp::Union: return in_a || in_b;
        case BoolOp::Intersect: return in_a && in_b;
        case BoolOp::Difference: return in_a && !in_b;
    }
    return false;
}

// Exact Boolean combination by elementary subdivision: every breakpoint
// and every open segment between consecutive breakpoints has constant
// membership in both operands.
IntervalUnion combine(const IntervalUnion& a, const IntervalUnion& b, BoolOp op) {
    std::vector<Rational> breaks;
    breaks.reserve(2 * (a.size() + b.size()));
    for (const auto* u : {&a, &b}) {
        for (const auto& p : *u) {
            breaks.push_back(p.lo());
            breaks.push_back(p.hi());
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<Interval> out;
    bool in_run = false;
    Rational run_lo;
    bool run_lo_closed = false;
    Rational run_hi;
    bool run_hi_closed = false;
    auto flush = [&] {
        if (in_run) out.emplace_back(run_lo, run_hi, run_lo_closed, run_hi_closed);
        in_run = false;
    };
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        const Rational& v = breaks[i];
        if (apply(op, contains_point(a, v), contains_point(b, v))) {
            if (!in_run) {
                in_run = true;
                run_lo = v;
                run_lo_closed = true;
            }
            run_hi = v;
            run_hi_closed = true;
        } else {
            flush();
        }
        if (i + 1 == breaks.size()) break;
        if (apply(op, segment_member(a, v), segment_member(b, v))) {
            if (!in_run) {
                in_run = true;
                run_lo = v;
                run_lo_closed = false;
            }
            run_hi = breaks[i + 1];
            run_hi_closed = false;
        } else {
            flush();
        }
    }
    flush();
    return IntervalUnion::from_canonical(std::move(out));
}

Interval pair_sum(const Interval& p, const Interval& q) {
    return {p.lo() + q.lo(), p.hi() + q.hi(), p.lo_closed() && q.lo_closed(), p.hi_closed() && q.hi_closed()};
}

}  // namespace

IntervalUnion set_union(const IntervalUnion& a, const IntervalUnion& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return combine(a, b, BoolOp::Union);
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
    if (a.empty() || b.empty()) return {};
    return combine(a, b, BoolOp::Intersect);
}

IntervalUnion set_difference(const IntervalUnion& a, const IntervalUnion& b) {
    if (a.empty() || b.empty()) return a;
    return combine(a, b, BoolOp::Difference);
}

IntervalUnion complement_within(const IntervalUnion& a, const Interval& frame) {
    return set_difference(IntervalUnion(frame), a);
}

IntervalUnion minkowski_sum(const IntervalUnion& a, const IntervalUnion& b) {
    if (a.empty() || b.empty()) return {};
    // One sorted stream per part of the shorter operand, merged by lo. Each
    // stream is strictly increasing in lo because the other operand is.
    const IntervalUnion& outer = a.size() <= b.size() ? a : b;
    const IntervalUnion& inner = a.size() <= b.size() ? b : a;

    struct Cursor {
        Interval sum;
        std::size_t i;
        std::size_t j;
    };
    auto later = [](const Cursor& x, const Cursor& y) { return lo_order(y.sum, x.sum); };
    std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
    for (std::size_t i = 0; i < outer.size(); ++i) heap.push({pair_sum(outer[i], inner[0]), i, 0});

    UnionBuilder builder;
    while (!heap.empty()) {
        Cursor c = heap.top();
        heap.pop();
        builder.push(c.sum);
        if (c.j + 1 < inner.size()) {
            heap.push({pair_sum(outer[c.i], inner[c.j + 1]), c.i, c.j + 1});
        }
    }
    return std::move(builder).finish();
}

namespace {

// Overlap of two intervals, if any.
std::optional<Interval> overlap(Rational lo, bool lc, Rational hi, bool hc, const Interval& b) {
    if (lo < b.lo()) {
        lo = b.lo();
        lc = b.lo_closed();
    } else if (lo == b.lo()) {
        lc = lc && b.lo_closed();
    }
    if (b.hi() < hi) {
        hi = b.hi();
        hc = b.hi_closed();
    } else if (hi == b.hi()) {
        hc = hc && b.hi_closed();
    }
    if (hi < lo || (lo == hi && !(lc && hc))) return std::nullopt;
    return Interval(std::move(lo), std::move(hi), lc, hc);
}

}  // namespace

IntervalUnion minkowski_sum_within(const IntervalUnion& a, const IntervalUnion& b, const Interval& frame) {
    if (a.empty() || b.empty()) return {};
    const IntervalUnion& base = a.size() <= b.size() ? b : a;
    const IntervalUnion& shifts = a.size() <= b.size() ? a : b;
    // x is outside the sum iff x - P lies in the complement of base for every part P.
    const Interval ambient = Interval::closed(frame.lo() - shifts.parts().back().hi() - Rational(1),
                                              frame.hi() - shifts.parts().front().lo() + Rational(1));
    const IntervalUnion holes = complement_within(base, ambient);
    IntervalUnion outside(frame);
    for (const auto& p : shifts) {
        if (outside.empty()) break;
        // erode holes by Q = -P: x + Q inside one hole
        const Rational qlo = -p.hi();
        const Rational qhi = -p.lo();
        const bool q_lo_closed = p.hi_closed();
        const bool q_hi_closed = p.lo_closed();
        UnionBuilder next;
        for (const auto& r : outside) {
            auto it = std::lower_bound(holes.begin(), holes.end(), r.lo() + qhi,
                                       [](const Interval& h, const Rational& v) { return h.hi() < v; });
            for (; it != holes.end(); ++it) {
                const Rational lo = it->lo() - qlo;
                if (r.hi() < lo) break;
                const Rational hi = it->hi() - qhi;
                const bool lc = it->lo_closed() || !q_lo_closed;
                const bool hc = it->hi_closed() || !q_hi_closed;
                if (hi < lo || (lo == hi && !(lc && hc))) continue;
                if (auto piece = overlap(lo, lc, hi, hc, r)) next.push(*piece);
            }
        }
        outside = std::move(next).finish();
    }
    return set_difference(IntervalUnion(frame), outside);
}

IntervalUnion reflect(const IntervalUnion& a) {
    std::vector<Interval> out;
    out.reserve(a.size());
    for (auto it = a.parts().rbegin(); it != a.parts().rend(); ++it) {
        out.emplace_back(-it->hi(), -it->lo(), it->hi_closed(), it->lo_closed());
    }
    return IntervalUnion::from_canonical(std::move(out));
}

IntervalUnion translate(const IntervalUnion& a, const Rational& t) {
    if (t.is_zero()) return a;
    std::vector<Interval> out;
    out.reserve(a.size());
    for (const auto& p : a) out.emplace_back(p.lo() + t, p.hi() + t, p.lo_closed(), p.hi_closed());
    return IntervalUnion::from_canonical(std::move(out));
}

IntervalUnion scale(const IntervalUnion& a, const Rational& k) {
    if (k.is_zero()) throw std::invalid_argument("scale factor must be nonzero");
    std::vector<Interval> out;
    out.reserve(a.size());
    if (k.sign() > 0) {
        for (const auto& p : a) out.emplace_back(p.lo() * k, p.hi() * k, p.lo_closed(), p.hi_closed());
    } else {
        for (auto it = a.parts().rbegin(); it != a.parts().rend(); ++it) {
            out.emplace_back(it->hi() * k, it->lo() * k, it->hi_closed(), it->lo_closed());
        }
    }
    return IntervalUnion::from_canonical(std::move(out));
}

IntervalUnion points(std::span<const Rational> xs) {
    std::vector<Interval> raw;
    raw.reserve(xs.size());
    for (const auto& x : xs) raw.push_back(Interval::point(x));
    return normalize(std::move(raw));
}

Rational measure(const IntervalUnion& a) {
    Rational total;
    for (const auto& p : a) total += p.length();
    return total;
}

Rational max_component_length(const IntervalUnion& a) {
    Rational best;
    for (const auto& p : a) {
        Rational len = p.length();
        if (best < len) best = std::move(len);
    }
    return best;
}

bool contains_point(const IntervalUnion& a, const Rational& x) {
    const std::size_t i = last_part_at_or_before(a, x);
    if (i == static_cast<std::size_t>(-1)) return false;
    return a[i].contains(x);
}

bool is_subset(const IntervalUnion& a, const IntervalUnion& b) { return set_difference(a, b).empty(); }

std::vector<Rational> point_parts(const IntervalUnion& a) {
    std::vector<Rational> out;
    for (const auto& p : a) {
        if (p.is_point()) out.push_back(p.lo());
    }
    return out;
}

std::size_t point_part_count(const IntervalUnion& a) {
    return static_cast<std::size_t>(
        std::count_if(a.begin(), a.end(), [](const Interval& p) { return p.is_point(); }));
}

}  // namespace cantorgap

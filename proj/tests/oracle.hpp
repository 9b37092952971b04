#pragma once

// Brute-force reference used by the tests. It only reads interval fields and
// does its own membership, overlap and subdivision logic.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "cantorgap/interval.hpp"

namespace oracle {

using cantorgap::Interval;
using cantorgap::IntervalUnion;
using cantorgap::Rational;

struct Piece {
    Rational lo, hi;
    bool lc = true, hc = true;
};

inline std::vector<Piece> pieces(const IntervalUnion& u) {
    std::vector<Piece> out;
    for (const auto& p : u) out.push_back({p.lo(), p.hi(), p.lo_closed(), p.hi_closed()});
    return out;
}

inline bool in_piece(const Piece& p, const Rational& x) {
    const bool above = p.lc ? !(x < p.lo) : p.lo < x;
    const bool below = p.hc ? !(p.hi < x) : x < p.hi;
    return above && below;
}

inline bool member(const std::vector<Piece>& u, const Rational& x) {
    return std::any_of(u.begin(), u.end(), [&](const Piece& p) { return in_piece(p, x); });
}

inline bool overlaps(const Piece& p, const Piece& q) {
    Rational lo = p.lo;
    bool lc = p.lc;
    if (q.lo > lo) {
        lo = q.lo;
        lc = q.lc;
    } else if (q.lo == lo) {
        lc = lc && q.lc;
    }
    Rational hi = p.hi;
    bool hc = p.hc;
    if (q.hi < hi) {
        hi = q.hi;
        hc = q.hc;
    } else if (q.hi == hi) {
        hc = hc && q.hc;
    }
    return lo < hi || (lo == hi && lc && hc);
}

// x in A + B  iff  some P in A meets x - Q for some Q in B.
inline bool sum_member(const std::vector<Piece>& a, const std::vector<Piece>& b, const Rational& x) {
    for (const auto& q : b) {
        const Piece shifted{x - q.hi, x - q.lo, q.hc, q.lc};
        for (const auto& p : a) {
            if (overlaps(p, shifted)) return true;
        }
    }
    return false;
}

inline void add_ends(std::vector<Rational>& crit, const std::vector<Piece>& u) {
    for (const auto& p : u) {
        crit.push_back(p.lo);
        crit.push_back(p.hi);
    }
}

// Critical points, their midpoints and one point beyond each end.
inline std::vector<Rational> samples(std::vector<Rational> crit) {
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    std::vector<Rational> out;
    if (crit.empty()) return {Rational(0)};
    out.push_back(crit.front() - Rational(1));
    for (std::size_t i = 0; i < crit.size(); ++i) {
        out.push_back(crit[i]);
        if (i + 1 < crit.size()) out.push_back((crit[i] + crit[i + 1]) / Rational(2));
    }
    out.push_back(crit.back() + Rational(1));
    return out;
}

// Result must be canonical and match `pred` on every elementary piece; the
// result's own endpoints are part of the subdivision.
inline bool agrees(const IntervalUnion& result, std::vector<Rational> crit,
                   const std::function<bool(const Rational&)>& pred) {
    if (!result.is_canonical()) return false;
    const auto mine = pieces(result);
    add_ends(crit, mine);
    for (const auto& x : samples(std::move(crit))) {
        if (member(mine, x) != pred(x)) return false;
    }
    return true;
}

// Lebesgue measure of {x : pred(x)} given all breakpoints.
inline Rational measure_of(std::vector<Rational> crit, const std::function<bool(const Rational&)>& pred) {
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    Rational total;
    for (std::size_t i = 0; i + 1 < crit.size(); ++i) {
        if (pred((crit[i] + crit[i + 1]) / Rational(2))) total += crit[i + 1] - crit[i];
    }
    return total;
}

// Random raw interval with denominator <= max_den inside [-2, 2].
inline Interval random_interval(std::mt19937& rng, int max_den) {
    std::uniform_int_distribution<int> den_d(1, max_den);
    const int q = den_d(rng);
    std::uniform_int_distribution<int> num_d(-2 * q, 2 * q);
    int a = num_d(rng);
    int b = num_d(rng);
    if (a > b) std::swap(a, b);
    if (rng() % 4 == 0) b = a;
    bool lc = rng() % 2;
    bool hc = rng() % 2;
    if (a == b) lc = hc = true;
    return Interval(Rational(a, q), Rational(b, q), lc, hc);
}

inline std::vector<Interval> random_raw(std::mt19937& rng, int max_parts, int max_den) {
    std::uniform_int_distribution<int> k_d(0, max_parts);
    std::vector<Interval> raw;
    const int k = k_d(rng);
    for (int i = 0; i < k; ++i) raw.push_back(random_interval(rng, max_den));
    return raw;
}

// Ternary-type central stage built from scratch: closed components.
inline std::vector<std::pair<Rational, Rational>> central_components(const Rational& a, int n) {
    std::vector<std::pair<Rational, Rational>> comps{{Rational(0), Rational(1)}};
    for (int k = 0; k < n; ++k) {
        std::vector<std::pair<Rational, Rational>> next;
        for (const auto& [l, r] : comps) {
            const Rational side = (r - l) * (Rational(1) - a) / Rational(2);
            next.push_back({l, l + side});
            next.push_back({r - side, r});
        }
        comps = std::move(next);
    }
    return comps;
}

struct StageData {
    std::vector<Piece> comps;
    std::vector<Piece> gaps;
    std::vector<Rational> ends;
};

inline StageData central_data(const Rational& a, int n) {
    StageData d;
    const auto comps = central_components(a, n);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        d.comps.push_back({comps[i].first, comps[i].second, true, true});
        d.ends.push_back(comps[i].first);
        d.ends.push_back(comps[i].second);
        if (i + 1 < comps.size()) d.gaps.push_back({comps[i].second, comps[i + 1].first, false, false});
    }
    return d;
}

// x in inner(n): x + e in some gap for an endpoint e.
inline bool inner_member(const StageData& d, const Rational& x) {
    for (const auto& e : d.ends) {
        for (const auto& g : d.gaps) {
            if (in_piece(g, x + e)) return true;
        }
    }
    return false;
}

inline std::vector<Rational> inner_breaks(const StageData& d) {
    std::vector<Rational> crit{Rational(-1), Rational(1)};
    for (const auto& e : d.ends) {
        for (const auto& g : d.gaps) {
            crit.push_back(g.lo - e);
            crit.push_back(g.hi - e);
        }
    }
    return crit;
}

}  // namespace oracle

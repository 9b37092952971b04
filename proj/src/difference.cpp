#include "cantorgap/difference.hpp"

#include <algorithm>
#include <map>

namespace cantorgap {

namespace {

const Rational kOne(1);

Interval unit() { return Interval::closed(Rational(0), kOne); }
Interval symmetric_unit() { return Interval::closed(-kOne, kOne); }

Rational measure_within(const IntervalUnion& u, const Rational& lo, const Rational& hi) {
    return measure(intersect(u, IntervalUnion(Interval::closed(lo, hi))));
}

Rational witness_of(const IntervalUnion& nonempty) {
    const Interval& p = nonempty[0];
    if (p.lo_closed()) return p.lo();
    if (p.hi_closed()) return p.hi();
    return p.center();
}

}  // namespace

IntervalUnion inner_diff(const CantorStage& stage) {
    if (stage.gaps.empty()) return {};
    return minkowski_sum_within(stage.gap_union(), reflect(points(stage.endpoints)), symmetric_unit());
}

IntervalUnion outer_diff(const CantorStage& stage) {
    const IntervalUnion punctured = set_difference(IntervalUnion(unit()), points(stage.endpoints));
    return minkowski_sum_within(punctured, reflect(stage.components), symmetric_unit());
}

DiffBracket diff_bracket(const CantorStage& stage) {
    DiffBracket b;
    b.n = stage.n;
    b.inner = inner_diff(stage);
    b.outer = outer_diff(stage);
    const IntervalUnion frame(symmetric_unit());
    b.missing_outer = set_difference(frame, b.inner);
    b.missing_inner = set_difference(frame, b.outer);
    return b;
}

const char* llg_mode_name(LlgMode mode) { return mode == LlgMode::Strict ? "strict" : "non-strict"; }

LlgCertificate llg_certify(const CantorStage& stage, const GapRecord& gap, const Rational& a, const Rational& b) {
    if (!std::binary_search(stage.endpoints.begin(), stage.endpoints.end(), a) ||
        !std::binary_search(stage.endpoints.begin(), stage.endpoints.end(), b)) {
        throw std::invalid_argument("llg_certify: a and b must be stage endpoints");
    }
    if (b < a) throw std::invalid_argument("llg_certify: a > b");
    const auto recorded = std::find_if(stage.gaps.begin(), stage.gaps.end(),
                                       [&](const GapRecord& g) { return g.interval == gap.interval; });
    if (recorded == stage.gaps.end()) throw std::invalid_argument("llg_certify: gap is not a gap of this stage");
    const Interval& g = gap.interval;
    if (!(g.lo() < a) && !(b < g.hi())) throw std::invalid_argument("llg_certify: [a,b] contains the gap");

    const Rational gap_len = g.length();
    const Rational max_comp = max_component_length(intersect(stage.components, IntervalUnion(Interval::closed(a, b))));
    Rational max_gap;
    std::size_t count = 0;
    std::vector<Rational> equal_lefts;
    for (const auto& h : stage.gaps) {
        if (h.interval.lo() < a || b < h.interval.hi()) continue;
        ++count;
        const Rational len = h.interval.length();
        if (max_gap < len) max_gap = len;
        if (len == gap_len) equal_lefts.push_back(h.interval.lo());
    }

    if (gap_len < max_comp) {
        throw NotCertifiable("gap " + g.str() + " is shorter than a component of C_n ∩ [" + a.str() + ", " + b.str() +
                                 "] (" + max_comp.str() + ")",
                             stage.n);
    }
    if (gap_len < max_gap) {
        throw NotCertifiable("gap " + g.str() + " is shorter than a recorded gap in [" + a.str() + ", " + b.str() + "]",
                             stage.n);
    }

    LlgCertificate cert{*recorded, a, b, LlgMode::Strict, Interval::open(g.lo() - b, g.hi() - a), {}, stage.n,
                        max_comp, max_gap, count};
    if (!equal_lefts.empty()) {
        cert.mode = LlgMode::NonStrict;
        for (const auto& l : equal_lefts) cert.exceptions.push_back(g.lo() - l);
        std::sort(cert.exceptions.begin(), cert.exceptions.end());
    }
    return cert;
}

IntervalUnion llg_covered(const LlgCertificate& cert) {
    return set_difference(IntervalUnion(cert.certified_interval), points(cert.exceptions));
}

LsCheck ls_stage_certify(const std::vector<CantorStage>& stages, const std::vector<IntervalUnion>& y_stages,
                         bool by_construction) {
    if (stages.size() != y_stages.size() || stages.empty()) {
        throw std::invalid_argument("ls_stage_certify needs one Y_n per stage");
    }
    const IntervalUnion frame(unit());
    LsCheck out;
    LsCertificate cert;
    cert.by_construction = by_construction;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const IntervalUnion& c = stages[i].components;
        const IntervalUnion reached = intersect(minkowski_sum(c, y_stages[i]), frame);
        const IntervalUnion escaped = set_difference(reached, c);
        if (!escaped.empty()) {
            out.violation = LsViolation{stages[i].n, witness_of(escaped)};
            return out;
        }
        cert.c_stages.push_back(c);
        cert.y_stages.push_back(y_stages[i]);
        cert.n_checked = stages[i].n;
    }
    cert.y = y_stages.back();
    out.certificate = std::move(cert);
    return out;
}

TheoreticalMissingSet theoretical_missing_set(const CentralSpec& spec, int k_max) {
    std::vector<Rational> pts{Rational(0), kOne, -kOne};
    for (int k = 0; k <= k_max; ++k) {
        const Rational r = central_r_P(spec, k);
        pts.push_back(r);
        pts.push_back(-r);
    }
    return {points(pts), spec.all_ratios_at_least(Rational(1, 3))};
}

std::vector<ChainLink> countability_certificate(const CentralSpec& spec, int depth, Budget budget) {
    std::map<int, CantorStage> cache;
    auto stage_at = [&](int n) -> const CantorStage& {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, central_stage(spec, n, budget)).first;
        return it->second;
    };

    std::vector<ChainLink> chain;
    Rational left(0);  // r(G_{k-1}), with r(G_0) = 0
    int n = 1;
    for (int k = 1; k <= depth; ++k) {
        std::optional<ChainLink> link;
        std::string last_reason = "no gap in [" + left.str() + ", 1]";
        for (;; ++n) {
            const CantorStage* stage = nullptr;
            try {
                stage = &stage_at(n);
            } catch (const BudgetExceeded&) {
                throw NotCertifiable("chain link " + std::to_string(k) + " not certifiable within budget: " + last_reason,
                                     n - 1);
            }
            Rational max_comp;
            for (const auto& p : stage->components) {
                if (!(p.lo() < left) && max_comp < p.length()) max_comp = p.length();
            }
            const GapRecord* best = nullptr;
            for (const auto& g : stage->gaps) {
                if (g.interval.lo() < left) continue;
                if (!best || !(g.interval.length() < best->interval.length())) best = &g;
            }
            // Rightmost longest is settled only once no future gap can be as long.
            if (!best || best->interval.length() < max_comp) continue;
            const Rational b = best->interval.lo() - left;
            if (!std::binary_search(stage->endpoints.begin(), stage->endpoints.end(), b)) continue;
            try {
                link = ChainLink{*best, n, llg_certify(*stage, *best, Rational(0), b)};
            } catch (const NotCertifiable& e) {
                last_reason = e.what();
                continue;
            }
            break;
        }
        left = link->gap.interval.hi();
        chain.push_back(std::move(*link));
    }
    return chain;
}

std::vector<SteinhausRow> steinhaus_suite(const std::vector<DiffBracket>& brackets) {
    const Rational half(1, 2), three_q(3, 4);
    std::vector<SteinhausRow> rows;
    rows.reserve(brackets.size());
    for (const auto& br : brackets) {
        SteinhausRow row;
        row.n = br.n;
        row.central = measure_within(br.missing_outer, -half, half);
        row.zones = {measure_within(br.missing_outer, -kOne, -three_q),
                     measure_within(br.missing_outer, -three_q, -half),
                     measure_within(br.missing_outer, half, three_q),
                     measure_within(br.missing_outer, three_q, kOne)};
        row.missing_total = measure(br.missing_outer);
        row.outer_measure = measure(br.outer);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cantorgap

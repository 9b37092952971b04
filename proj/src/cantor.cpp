#include "cantorgap/cantor.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace cantorgap {

std::string family_name(Family f) {
    switch (f) {
        case Family::Central: return "central";
        case Family::Perturbed: return "perturbed";
        case Family::Tab: return "tab";
        case Family::Greedy: return "greedy";
    }
    return "unknown";
}

NodeAddress::NodeAddress(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_) {
        if (c != '0' && c != '1') throw std::invalid_argument("node address must be a binary string: " + bits_);
    }
}

BudgetExceeded::BudgetExceeded(std::size_t requested, std::size_t budget)
    : std::runtime_error("stage needs " + std::to_string(requested) + " components, budget is " +
                         std::to_string(budget)),
      requested_(requested),
      budget_(budget) {}

IntervalUnion CantorStage::gap_union() const {
    std::vector<Interval> raw;
    raw.reserve(gaps.size());
    for (const auto& g : gaps) raw.push_back(g.interval);
    return normalize(std::move(raw));
}

const GapRecord* CantorStage::find_gap(const NodeAddress& address) const {
    for (const auto& g : gaps) {
        if (g.address == address) return &g;
    }
    return nullptr;
}

std::optional<std::size_t> CantorStage::component_index(const NodeAddress& address) const {
    for (std::size_t i = 0; i < addresses.size(); ++i) {
        if (addresses[i] == address) return i;
    }
    return std::nullopt;
}

namespace {

const Rational kHalf(1, 2);

struct Node {
    NodeAddress address;
    Rational lo;
    Rational hi;
};

void check_budget(int n, Budget budget) {
    if (n < 0) throw std::invalid_argument("stage index must be non-negative");
    if (n >= 62 || (std::size_t{1} << n) > budget.max_components) {
        throw BudgetExceeded(n >= 62 ? static_cast<std::size_t>(-1) : (std::size_t{1} << n), budget.max_components);
    }
}

std::vector<Rational> collect_endpoints(const IntervalUnion& components) {
    std::vector<Rational> out;
    out.reserve(2 * components.size());
    for (const auto& p : components) {
        out.push_back(p.lo());
        if (!p.is_point()) out.push_back(p.hi());
    }
    // Parts are disjoint and sorted, so only a point part can repeat a value.
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CantorStage assemble_tree(Family family, int n, const std::vector<Node>& nodes, std::vector<GapRecord> gaps) {
    CantorStage stage;
    stage.family = family;
    stage.n = n;
    std::vector<Interval> parts;
    parts.reserve(nodes.size());
    stage.addresses.reserve(nodes.size());
    for (const auto& node : nodes) {
        parts.push_back(Interval::closed(node.lo, node.hi));
        stage.addresses.push_back(node.address);
    }
    stage.components = IntervalUnion::from_canonical(std::move(parts));
    std::sort(gaps.begin(), gaps.end(),
              [](const GapRecord& x, const GapRecord& y) { return x.interval.lo() < y.interval.lo(); });
    stage.gaps = std::move(gaps);
    stage.endpoints = collect_endpoints(stage.components);
    return stage;
}

bool in_unit_open(const Rational& x) { return x.sign() > 0 && x < Rational(1); }

Rational ceil_rational(const Rational& x) {
    const mpq_class q = x.to_mpq();
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(mpq_class(c));
}

}  // namespace

CentralSpec CentralSpec::constant(Rational a) {
    CentralSpec s;
    s.rule = Rule::Constant;
    s.tail = std::move(a);
    return s;
}

CentralSpec CentralSpec::list(std::vector<Rational> prefix, Rational tail) {
    CentralSpec s;
    s.rule = Rule::List;
    s.prefix = std::move(prefix);
    s.tail = std::move(tail);
    return s;
}

CentralSpec CentralSpec::geometric(Rational first, Rational factor) {
    CentralSpec s;
    s.rule = Rule::Geometric;
    s.first = std::move(first);
    s.factor = std::move(factor);
    return s;
}

Rational CentralSpec::ratio(int n) const {
    if (n < 1) throw std::invalid_argument("ratio index starts at 1");
    switch (rule) {
        case Rule::Constant: return tail;
        case Rule::List:
            return static_cast<std::size_t>(n) <= prefix.size() ? prefix[static_cast<std::size_t>(n) - 1] : tail;
        case Rule::Geometric: return first * pow(factor, static_cast<unsigned>(n - 1));
    }
    return tail;
}

void CentralSpec::validate() const {
    switch (rule) {
        case Rule::Constant:
            if (!in_unit_open(tail)) throw SpecError("ratio out of (0,1): " + tail.str());
            break;
        case Rule::List:
            for (const auto& a : prefix) {
                if (!in_unit_open(a)) throw SpecError("ratio out of (0,1): " + a.str());
            }
            if (!in_unit_open(tail)) throw SpecError("ratio out of (0,1): " + tail.str());
            break;
        case Rule::Geometric:
            if (!in_unit_open(first)) throw SpecError("ratio out of (0,1): " + first.str());
            if (factor.sign() <= 0 || Rational(1) < factor) {
                throw SpecError("geometric ratio factor out of (0,1]: " + factor.str());
            }
            break;
    }
}

bool CentralSpec::all_ratios_at_least(const Rational& bound) const {
    switch (rule) {
        case Rule::Constant: return !(tail < bound);
        case Rule::List:
            return std::all_of(prefix.begin(), prefix.end(), [&](const Rational& a) { return !(a < bound); }) &&
                   !(tail < bound);
        case Rule::Geometric: return factor == Rational(1) && !(first < bound);
    }
    return false;
}

CantorStage central_stage(const CentralSpec& spec, int n, Budget budget) {
    spec.validate();
    check_budget(n, budget);
    std::vector<Node> nodes{{NodeAddress(), Rational(0), Rational(1)}};
    std::vector<GapRecord> gaps;
    for (int k = 1; k <= n; ++k) {
        const Rational side = (Rational(1) - spec.ratio(k)) / Rational(2);
        std::vector<Node> next;
        next.reserve(2 * nodes.size());
        for (const auto& node : nodes) {
            const Rational keep = (node.hi - node.lo) * side;
            const Rational gap_lo = node.lo + keep;
            const Rational gap_hi = node.hi - keep;
            gaps.push_back({node.address, Interval::open(gap_lo, gap_hi), k});
            next.push_back({node.address.child('0'), node.lo, gap_lo});
            next.push_back({node.address.child('1'), gap_hi, node.hi});
        }
        nodes = std::move(next);
    }
    return assemble_tree(Family::Central, n, nodes, std::move(gaps));
}

Rational central_r_P(const CentralSpec& spec, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    spec.validate();
    Rational len(1);
    for (int j = 1; j <= k + 1; ++j) len *= (Rational(1) - spec.ratio(j)) / Rational(2);
    return Rational(1) - len;
}

Rational lbrick_shift(const CantorStage& stage, const NodeAddress& t) {
    if (stage.family != Family::Central || !stage.is_tree()) {
        throw std::invalid_argument("lbrick_shift requires a central stage");
    }
    if (t.depth() > static_cast<std::size_t>(stage.n)) {
        throw std::invalid_argument("address deeper than the stage");
    }
    const NodeAddress zeros = NodeAddress::repeat('0', t.depth());
    // I_t is the hull of the stage components under t.
    std::optional<Rational> t_lo, t_hi, z_lo, z_hi;
    for (std::size_t i = 0; i < stage.addresses.size(); ++i) {
        const auto& part = stage.components[i];
        if (stage.addresses[i].extends(t)) {
            if (!t_lo) t_lo = part.lo();
            t_hi = part.hi();
        }
        if (stage.addresses[i].extends(zeros)) {
            if (!z_lo) z_lo = part.lo();
            z_hi = part.hi();
        }
    }
    const Rational shift = *t_lo - *z_lo;
    const IntervalUnion left = intersect(stage.components, Interval::closed(*z_lo, *z_hi));
    const IntervalUnion right = intersect(stage.components, Interval::closed(*t_lo, *t_hi));
    if (translate(left, shift) != right) {
        throw std::logic_error("components under " + t.label() + " are not a shift of the leftmost branch");
    }
    return shift;
}

void PerturbedSpec::validate() const {
    if (!in_unit_open(c1)) throw SpecError("c1 out of (0,1): " + c1.str());
    if (!in_unit_open(shrink)) throw SpecError("shrink out of (0,1): " + shrink.str());
    if (interior_gap_fraction.sign() <= 0 || Rational(1) < interior_gap_fraction) {
        throw SpecError("interior_gap_fraction out of (0,1]: " + interior_gap_fraction.str());
    }
}

std::vector<Rational> perturbed_gap_lengths(const PerturbedSpec& spec, int n) {
    spec.validate();
    std::vector<Rational> c;
    if (n < 1) return c;
    c.push_back(spec.c1);
    Rational extreme = (Rational(1) - spec.c1) / Rational(2);  // |I_{0^k}| for k = 1
    for (int k = 1; k < n; ++k) {
        Rational next = spec.shrink * min(c.back(), extreme);
        if (!(next < c.back()) || !(next < extreme / Rational(2))) {
            throw SpecError("perturbed gap sequence violates c_{n+1} < c_n and c_{n+1} < |I_{0^n}|/2 at n = " +
                            std::to_string(k));
        }
        c.push_back(std::move(next));
        extreme = extreme / Rational(2);
    }
    return c;
}

CantorStage perturbed_stage(const PerturbedSpec& spec, int n, Budget budget) {
    check_budget(n, budget);
    const std::vector<Rational> c = perturbed_gap_lengths(spec, n);
    std::vector<Node> nodes{{NodeAddress(), Rational(0), Rational(1)}};
    std::vector<GapRecord> gaps;
    for (int k = 1; k <= n; ++k) {
        const Rational& g = c[static_cast<std::size_t>(k) - 1];
        std::vector<Node> next;
        next.reserve(2 * nodes.size());
        for (const auto& node : nodes) {
            const std::string& bits = node.address.bits();
            const Rational len = node.hi - node.lo;
            const Rational mid = (node.lo + node.hi) / Rational(2);
            Rational gap_lo, gap_hi;
            const bool all_zero = std::all_of(bits.begin(), bits.end(), [](char b) { return b == '0'; });
            const bool all_one = std::all_of(bits.begin(), bits.end(), [](char b) { return b == '1'; });
            if (bits.empty()) {
                gap_lo = mid - g / Rational(2);
                gap_hi = mid + g / Rational(2);
            } else if (all_zero) {
                gap_lo = mid;
                gap_hi = mid + g;
            } else if (all_one) {
                gap_lo = mid - g;
                gap_hi = mid;
            } else {
                const Rational width = min(spec.interior_gap_fraction * g, len / Rational(2));
                gap_lo = mid - width / Rational(2);
                gap_hi = mid + width / Rational(2);
            }
            gaps.push_back({node.address, Interval::open(gap_lo, gap_hi), k});
            next.push_back({node.address.child('0'), node.lo, gap_lo});
            next.push_back({node.address.child('1'), gap_hi, node.hi});
        }
        nodes = std::move(next);
    }
    return assemble_tree(Family::Perturbed, n, nodes, std::move(gaps));
}

CantorStage ScaledCentral::stage(int n, Budget budget) const {
    if (scale.sign() <= 0) throw SpecError("scale must be positive: " + scale.str());
    CantorStage s = central_stage(spec, n, budget);
    s.components = cantorgap::scale(s.components, scale);
    for (auto& g : s.gaps) {
        g.interval = Interval::open(g.interval.lo() * scale, g.interval.hi() * scale);
    }
    for (auto& e : s.endpoints) e *= scale;
    return s;
}

CompositeSpec CompositeSpec::builtin() {
    CompositeSpec s;
    s.a = {CentralSpec::constant(Rational(1, 2)), Rational(1, 2)};
    s.b = s.a;
    return s;
}

IntervalUnion tab_components(const IntervalUnion& a, const IntervalUnion& b) {
    const IntervalUnion e =
        intersect(translate(minkowski_sum(a, b), kHalf), IntervalUnion(Interval::closed(kHalf, Rational(1))));
    return set_union(a, e);
}

CantorStage compose_tab(Family family, const std::vector<IntervalUnion>& a_stages,
                        const std::vector<IntervalUnion>& b_stages, Budget budget) {
    if (a_stages.empty() || a_stages.size() != b_stages.size()) {
        throw std::invalid_argument("compose_tab needs matching, non-empty stage sequences");
    }
    const Interval unit = Interval::closed(Rational(0), Rational(1));
    CantorStage stage;
    stage.family = family;
    std::vector<GapRecord> previous;
    Rational previous_max;
    for (std::size_t k = 0; k < a_stages.size(); ++k) {
        IntervalUnion comps = tab_components(a_stages[k], b_stages[k]);
        if (comps.size() > budget.max_components) throw BudgetExceeded(comps.size(), budget.max_components);
        const IntervalUnion holes = complement_within(comps, unit);
        std::vector<GapRecord> gaps;
        gaps.reserve(holes.size());
        std::size_t carried = 0;
        for (const auto& h : holes) {
            int created = static_cast<int>(k);
            // Gaps are sorted, so a moving cursor finds verbatim survivors.
            while (carried < previous.size() && previous[carried].interval.lo() < h.lo()) ++carried;
            if (carried < previous.size() && previous[carried].interval == h) created = previous[carried].stage_created;
            gaps.push_back({NodeAddress(), h, created});
        }
        if (k > 0) {
            for (const auto& old : previous) {
                const auto it = std::lower_bound(
                    gaps.begin(), gaps.end(), old,
                    [](const GapRecord& x, const GapRecord& y) { return x.interval.lo() < y.interval.lo(); });
                if (it == gaps.end() || it->interval != old.interval) {
                    stage.diagnostics.push_back("stage " + std::to_string(k) + ": gap " + old.interval.str() +
                                                " of the previous stage was not preserved");
                }
            }
            const Rational current_max = max_component_length(comps);
            if (!(current_max < previous_max)) {
                stage.diagnostics.push_back("stage " + std::to_string(k) + ": max component length " +
                                            current_max.str() + " did not decrease");
            }
        }
        previous_max = max_component_length(comps);
        previous = gaps;
        stage.components = std::move(comps);
        stage.gaps = std::move(gaps);
    }
    stage.n = static_cast<int>(a_stages.size()) - 1;
    stage.endpoints = collect_endpoints(stage.components);
    return stage;
}

CantorStage tab_stage(const CompositeSpec& spec, int n, Budget budget) {
    check_budget(n, budget);
    std::vector<IntervalUnion> a_stages, b_stages;
    for (int k = 0; k <= n; ++k) {
        a_stages.push_back(spec.a.stage(k, budget).components);
        b_stages.push_back(spec.b.stage(k, budget).components);
    }
    return compose_tab(Family::Tab, a_stages, b_stages, budget);
}

DyadicEnumerator::DyadicEnumerator(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("empty dyadic range");
}

Rational DyadicEnumerator::next() {
    for (;;) {
        if (!started_) {
            started_ = true;
            cursor_ = ceil_rational(lo_);
        } else {
            cursor_ += level_ == 0 ? step_ : step_ * Rational(2);
        }
        if (!(hi_ < cursor_)) return cursor_;
        // Next level: odd multiples of 2^-level.
        ++level_;
        step_ = step_ / Rational(2);
        Rational m = ceil_rational(lo_ / step_);
        if (m.to_mpq().get_num() % 2 == 0) m += Rational(1);
        cursor_ = m * step_ - step_ * Rational(2);
    }
}

GreedyStage greedy_stage(const GreedySpec& spec, int n, Budget budget) {
    check_budget(n, budget);
    if (!(Rational(0) < spec.margin_base && spec.margin_base < Rational(1))) {
        throw SpecError("margin base out of (0,1): " + spec.margin_base.str());
    }
    const Rational top = kHalf;
    std::vector<CantorStage> b_stages;
    for (int k = 0; k <= n + spec.lookahead_depth; ++k) b_stages.push_back(spec.b.stage(k, budget));

    GreedyStage out;
    std::vector<Node> nodes{{NodeAddress(), Rational(0), top}};
    std::vector<GapRecord> gaps;
    std::vector<IntervalUnion> a_history{IntervalUnion(Interval::closed(Rational(0), top))};
    DyadicEnumerator dense(spec.dense_lo, spec.dense_hi);
    std::deque<Rational> deferred;

    auto avoidance_for = [&](const Rational& d, const IntervalUnion& b, const Rational& delta) {
        std::vector<Interval> raw;
        raw.reserve(b.size());
        for (const auto& p : b) raw.push_back(Interval::closed(d - p.hi() - delta, d - p.lo() + delta));
        return normalize(std::move(raw));
    };

    for (int k = 0; k < n; ++k) {
        const IntervalUnion& bk = b_stages[static_cast<std::size_t>(k)].components;
        const IntervalUnion shifted_b = translate(bk, kHalf);
        const Rational delta = pow(spec.margin_base, static_cast<unsigned>(k + 1));

        // Pick the next dense point whose padded avoidance set leaves every
        // kept endpoint of A_k untouched.
        std::vector<Rational> accepted;
        std::deque<Rational> retry;
        retry.swap(deferred);
        // Only points of [0,1] can meet A + B; they go first.
        std::stable_partition(retry.begin(), retry.end(),
                              [](const Rational& d) { return !(d < Rational(0)) && !(Rational(1) < d); });
        for (int attempt = 0; attempt < spec.max_attempts_per_stage &&
                                  accepted.size() < static_cast<std::size_t>(spec.points_per_stage);
             ++attempt) {
            Rational d;
            if (!retry.empty()) {
                d = retry.front();
                retry.pop_front();
            } else {
                d = dense.next();
            }
            if (contains_point(bk, d) || contains_point(shifted_b, d)) {
                deferred.push_back(d);
                out.events.push_back({k, d, NodeAddress(), "not certified outside B_n ∪ (B_n + 1/2)"});
                continue;
            }
            const IntervalUnion avoid = avoidance_for(d, bk, delta);
            const Node* hit = nullptr;
            for (const auto& node : nodes) {
                if (contains_point(avoid, node.lo) || contains_point(avoid, node.hi)) {
                    hit = &node;
                    break;
                }
            }
            if (hit) {
                deferred.push_back(d);
                out.events.push_back({k, d, hit->address, "avoidance exhausted"});
                continue;
            }
            accepted.push_back(d);
        }
        while (!retry.empty()) {
            deferred.push_back(retry.front());
            retry.pop_front();
        }
        if (accepted.empty()) {
            throw AvoidanceStalled("no dense point could be avoided while refining stage " + std::to_string(k) +
                                   " after " + std::to_string(spec.max_attempts_per_stage) + " attempts");
        }
        out.avoided.insert(out.avoided.end(), accepted.begin(), accepted.end());

        std::vector<Interval> raw;
        for (const auto& d : out.avoided) {
            for (const auto& p : avoidance_for(d, bk, delta)) raw.push_back(p);
        }
        const IntervalUnion avoid = normalize(std::move(raw));

        // Pending candidates that are still acceptable steer the new
        // endpoints away from themselves, so they stay acceptable later.
        const Rational next_delta = delta * spec.margin_base;
        const IntervalUnion& b_next = b_stages[static_cast<std::size_t>(k + 1 + spec.lookahead_depth)].components;
        const IntervalUnion shifted_b_next = translate(b_next, kHalf);
        std::vector<Interval> soft_raw;
        int soft_count = 0;
        auto consider = [&](const Rational& d) {
            if (d < Rational(0) || Rational(1) < d) return;
            if (contains_point(b_next, d) || contains_point(shifted_b_next, d)) return;
            const IntervalUnion own = avoidance_for(d, b_next, next_delta);
            const bool blocked = std::any_of(nodes.begin(), nodes.end(), [&](const Node& node) {
                return contains_point(own, node.lo) || contains_point(own, node.hi);
            });
            if (blocked) return;
            for (const auto& p : own) soft_raw.push_back(p);
            ++soft_count;
        };
        for (const auto& d : deferred) {
            if (soft_count >= spec.lookahead) break;
            consider(d);
        }
        for (int pulled = 0; soft_count < spec.lookahead && pulled < spec.max_attempts_per_stage; ++pulled) {
            deferred.push_back(dense.next());
            consider(deferred.back());
        }
        const IntervalUnion soft = normalize(std::move(soft_raw));

        std::vector<Node> next;
        next.reserve(2 * nodes.size());
        for (const auto& node : nodes) {
            const Rational len = node.hi - node.lo;
            const Rational third = len / Rational(3);
            // First avoidance part to the right of lo, last one to the left of hi.
            Rational free_right = node.hi;
            Rational free_left = node.lo;
            for (const auto& p : avoid) {
                if (!(p.lo() < node.lo) && p.lo() < node.hi) {
                    free_right = p.lo();
                    break;
                }
            }
            for (auto it = avoid.parts().rbegin(); it != avoid.parts().rend(); ++it) {
                if (!(node.hi < it->hi()) && node.lo < it->hi()) {
                    free_left = it->hi();
                    break;
                }
            }
            for (const auto& p : soft) {
                if (node.lo < p.lo() && p.lo() < free_right) {
                    free_right = p.lo();
                    break;
                }
            }
            for (auto it = soft.parts().rbegin(); it != soft.parts().rend(); ++it) {
                if (it->hi() < node.hi && free_left < it->hi()) {
                    free_left = it->hi();
                    break;
                }
            }
            const Rational x = node.lo + min(third, (free_right - node.lo) / Rational(2));
            const Rational y = node.hi - min(third, (node.hi - free_left) / Rational(2));
            gaps.push_back({node.address, Interval::open(x, y), k + 1});
            next.push_back({node.address.child('0'), node.lo, x});
            next.push_back({node.address.child('1'), y, node.hi});
        }
        nodes = std::move(next);
        a_history.push_back(assemble_tree(Family::Greedy, k + 1, nodes, {}).components);
    }

    out.a = assemble_tree(Family::Greedy, n, nodes, std::move(gaps));
    b_stages.resize(static_cast<std::size_t>(n) + 1);
    out.b = b_stages.back();
    std::vector<IntervalUnion> b_history;
    for (const auto& s : b_stages) b_history.push_back(s.components);
    out.c = compose_tab(Family::Greedy, a_history, b_history, budget);

    const IntervalUnion sum = minkowski_sum(out.a.components, out.b.components);
    out.certificate_holds = std::none_of(out.avoided.begin(), out.avoided.end(),
                                         [&](const Rational& d) { return contains_point(sum, d); });
    return out;
}

}  // namespace cantorgap

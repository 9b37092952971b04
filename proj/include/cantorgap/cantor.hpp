#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cantorgap/interval.hpp"
#include "cantorgap/rational.hpp"

namespace cantorgap {

enum class Family { Central, Perturbed, Tab, Greedy };

std::string family_name(Family f);

// Path from the root of the binary construction tree: '0' = left child,
// '1' = right child. Stage-n components have length-n addresses.
class NodeAddress {
public:
    NodeAddress() = default;
    explicit NodeAddress(std::string bits);

    static NodeAddress repeat(char bit, std::size_t count) { return NodeAddress(std::string(count, bit)); }

    const std::string& bits() const { return bits_; }
    std::size_t depth() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    NodeAddress child(char bit) const { return NodeAddress(bits_ + bit); }
    bool extends(const NodeAddress& prefix) const { return bits_.compare(0, prefix.bits_.size(), prefix.bits_) == 0; }
    // "ε" for the root.
    std::string label() const { return bits_.empty() ? "ε" : bits_; }

    friend auto operator<=>(const NodeAddress&, const NodeAddress&) = default;

private:
    std::string bits_;
};

struct GapRecord {
    NodeAddress address;  // component the gap was removed from
    Interval interval;    // open at both ends
    int stage_created = 1;

    friend bool operator==(const GapRecord&, const GapRecord&) = default;
};

struct CantorStage {
    Family family = Family::Central;
    int n = 0;
    IntervalUnion components;             // closed parts
    std::vector<NodeAddress> addresses;   // aligned with components; empty for composite families
    std::vector<GapRecord> gaps;          // sorted by position
    std::vector<Rational> endpoints;      // sorted, distinct
    std::vector<std::string> diagnostics; // construction anomalies worth reporting

    IntervalUnion gap_union() const;
    const GapRecord* find_gap(const NodeAddress& address) const;
    std::optional<std::size_t> component_index(const NodeAddress& address) const;
    bool is_tree() const { return !addresses.empty(); }
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::size_t requested, std::size_t budget);
    std::size_t requested() const { return requested_; }
    std::size_t budget() const { return budget_; }

private:
    std::size_t requested_;
    std::size_t budget_;
};

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Cap on the number of stage components a generator may produce.
struct Budget {
    std::size_t max_components = std::size_t{1} << 14;
};

// Ratio rule a_n (n >= 1) for a central Cantor set.
struct CentralSpec {
    enum class Rule { Constant, List, Geometric };

    Rule rule = Rule::Constant;
    std::vector<Rational> prefix;  // List: a_1..a_k, then tail
    Rational tail = Rational(1, 3);  // Constant value, or List tail
    Rational first;                // Geometric: a_n = first * factor^(n-1)
    Rational factor;

    static CentralSpec constant(Rational a);
    static CentralSpec list(std::vector<Rational> prefix, Rational tail);
    static CentralSpec geometric(Rational first, Rational factor);

    Rational ratio(int n) const;
    // Throws SpecError("ratio out of (0,1)") when some a_n is outside (0,1).
    void validate() const;
    // Whether every a_n >= bound.
    bool all_ratios_at_least(const Rational& bound) const;
};

// Stage n of the central set: remove the open middle a_k fraction of every
// component at step k.
CantorStage central_stage(const CentralSpec& spec, int n, Budget budget = {});

// r(P_{1^k}) = 1 - prod_{j=1}^{k+1} (1 - a_j) / 2.
Rational central_r_P(const CentralSpec& spec, int k);

// Shift s with (C_n ∩ I_{0^|t|}) + s = C_n ∩ I_t, verified exactly on the
// stage. Throws std::invalid_argument for non-central stages or |t| > n.
Rational lbrick_shift(const CantorStage& stage, const NodeAddress& t);

struct PerturbedSpec {
    Rational c1 = Rational(1, 5);
    Rational shrink = Rational(1, 2);                 // c_{n+1} = shrink * min(c_n, |I_{0^n}|)
    Rational interior_gap_fraction = Rational(1);     // interior gaps: min(phi * c_{n+1}, |I_s| / 2)

    void validate() const;
};

// Stage n of the perturbed set: the all-0 branch gap starts at the centre
// of its component, the all-1 branch gap ends at the centre of its
// component, interior gaps are concentric.
CantorStage perturbed_stage(const PerturbedSpec& spec, int n, Budget budget = {});

// c_1..c_n for the perturbed construction. Throws SpecError when the
// sequence violates c_{k+1} < c_k or c_{k+1} < |I_{0^k}| / 2.
std::vector<Rational> perturbed_gap_lengths(const PerturbedSpec& spec, int n);

// Central set scaled into [0, scale].
struct ScaledCentral {
    CentralSpec spec = CentralSpec::constant(Rational(1, 2));
    Rational scale = Rational(1, 2);

    CantorStage stage(int n, Budget budget = {}) const;
};

// C = A ∪ ((A + B + 1/2) ∩ [1/2, 1]) with A, B ⊆ [0, 1/2].
struct CompositeSpec {
    ScaledCentral a;
    ScaledCentral b;

    // A = B = half-scaled central set with constant ratio 1/2.
    static CompositeSpec builtin();
};

// Components A ∪ ((A + B + 1/2) ∩ [1/2, 1]) as a union of closed parts.
IntervalUnion tab_components(const IntervalUnion& a, const IntervalUnion& b);

// Builds stage n from the nested component sequences a[0..n], b[0..n],
// tracking when each gap first appeared. Max-length stalls and broken gap
// persistence are recorded in diagnostics rather than accepted silently.
CantorStage compose_tab(Family family, const std::vector<IntervalUnion>& a_stages,
                        const std::vector<IntervalUnion>& b_stages, Budget budget = {});

CantorStage tab_stage(const CompositeSpec& spec, int n, Budget budget = {});

// Enumeration of dyadic rationals in [lo, hi], coarsest level first,
// ascending within a level.
class DyadicEnumerator {
public:
    DyadicEnumerator(Rational lo, Rational hi);
    Rational next();

private:
    Rational lo_;
    Rational hi_;
    int level_ = 0;
    Rational step_ = Rational(1);
    Rational cursor_;
    bool started_ = false;
};

struct GreedySpec {
    ScaledCentral b = {CentralSpec::geometric(Rational(1, 4), Rational(1, 4)), Rational(1, 2)};
    Rational dense_lo = Rational(-1);
    Rational dense_hi = Rational(2);
    Rational margin_base = Rational(1, 16);  // delta_n = margin_base^n
    int max_attempts_per_stage = 256;
    int points_per_stage = 1;
    int lookahead = 16;  // pending candidates in [0,1] the new endpoints steer clear of
    int lookahead_depth = 1;  // B-stages ahead used to certify those candidates
};

struct AvoidanceEvent {
    int stage = 0;          // stage being refined
    Rational d;             // candidate dense point
    NodeAddress address;    // component whose kept endpoint fell in the avoidance set
    std::string reason;
};

class AvoidanceStalled : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GreedyStage {
    CantorStage a;                   // A_n ⊆ [0, 1/2]
    CantorStage b;                   // B_n ⊆ [0, 1/2]
    CantorStage c;                   // composite over (A, B)
    std::vector<Rational> avoided;   // D_n, in acceptance order
    std::vector<AvoidanceEvent> events;
    bool certificate_holds = false;  // (A_n + B_n) ∩ D_n = ∅
};

GreedyStage greedy_stage(const GreedySpec& spec, int n, Budget budget = {});

}  // namespace cantorgap

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cantorgap/cantor.hpp"
#include "cantorgap/interval.hpp"

namespace cantorgap {

// Points certified inside C^c - C for the limit set: every gap of a stage
// stays a gap forever and every stage endpoint stays in the set, so each
// translate G - e lies in C^c - C. Open parts only; 0 is never covered.
IntervalUnion inner_diff(const CantorStage& stage);

// Certified superset of C^c - C: C^c ⊆ [0,1] \ E_n and C ⊆ C_n.
IntervalUnion outer_diff(const CantorStage& stage);

// inner ⊆ C^c - C ⊆ outer at stage n, plus the induced bracket
// missing_inner ⊆ S ⊆ missing_outer for S = [-1,1] \ (C^c - C).
struct DiffBracket {
    int n = 0;
    IntervalUnion inner;
    IntervalUnion outer;
    IntervalUnion missing_outer;
    IntervalUnion missing_inner;
};

DiffBracket diff_bracket(const CantorStage& stage);

class NotCertifiable : public std::runtime_error {
public:
    NotCertifiable(const std::string& what, int stage) : std::runtime_error(what), stage_(stage) {}
    int stage() const { return stage_; }

private:
    int stage_;
};

enum class LlgMode { Strict, NonStrict };

const char* llg_mode_name(LlgMode mode);

// Finite-stage application of the long-gap lemma, sound for the limit set.
//
// The lemma needs G to dominate every gap of C ∩ [a,b], including gaps not
// yet removed at this stage. Any such future gap lies strictly inside a
// current component of C_n ∩ [a,b], so it is strictly shorter than that
// component. Requiring |G| >= max component length of C_n ∩ [a,b] therefore
// bounds every future gap strictly below |G|, and only the recorded gaps
// need to be compared directly. For the same reason the exception set F of
// the non-strict case is complete once computed from recorded gaps of
// length exactly |G|.
struct LlgCertificate {
    GapRecord gap;
    Rational a;
    Rational b;
    LlgMode mode = LlgMode::Strict;
    Interval certified_interval;     // (l(G) - b, r(G) - a)
    std::vector<Rational> exceptions;  // F, non-strict mode only

    // Checked hypotheses, embedded for offline re-verification.
    int stage_n = 0;
    Rational max_component_in_range;
    Rational max_recorded_gap_in_range;
    std::size_t recorded_gaps_in_range = 0;
};

// Throws std::invalid_argument when a, b are not stage endpoints, a > b, the
// gap is not a recorded gap, or [a,b] contains the gap. Throws
// NotCertifiable when neither rule applies at this stage.
LlgCertificate llg_certify(const CantorStage& stage, const GapRecord& gap, const Rational& a, const Rational& b);

// certified_interval minus exceptions.
IntervalUnion llg_covered(const LlgCertificate& cert);

struct LsCertificate {
    IntervalUnion y;           // Y_N, the innermost checked superset
    int n_checked = 0;
    bool by_construction = false;
    std::vector<IntervalUnion> c_stages;  // checked hypotheses: C_1..C_N
    std::vector<IntervalUnion> y_stages;  // and Y_1..Y_N
};

struct LsViolation {
    int n = 0;
    Rational witness;  // point of (C_n + Y_n) ∩ [0,1] outside C_n
};

struct LsCheck {
    std::optional<LsCertificate> certificate;
    std::optional<LsViolation> violation;

    bool passed() const { return certificate.has_value(); }
};

// Verifies (C_n + Y_n) ∩ [0,1] ⊆ C_n for every supplied stage. The stage
// index reported is the stage's own n. Passing certifies Y ⊆ S for every
// Y ⊆ ∩ Y_n, because (C + Y) ∩ [0,1] ⊆ C_n for all n forces it into C.
LsCheck ls_stage_certify(const std::vector<CantorStage>& stages, const std::vector<IntervalUnion>& y_stages,
                         bool by_construction = false);

struct TheoreticalMissingSet {
    IntervalUnion points;
    bool exact = false;  // every ratio >= 1/3: the point set is all of S
};

// {0, ±1} ∪ {±r(P_{1^k}) : 0 <= k <= k_max}.
TheoreticalMissingSet theoretical_missing_set(const CentralSpec& spec, int k_max);

struct ChainLink {
    GapRecord gap;  // G_k: rightmost longest gap of C ∩ [r(G_{k-1}), 1]
    int stage_used = 0;
    LlgCertificate certificate;  // covers (r(G_{k-1}), r(G_k)) \ F_k
};

// Rightmost-longest-gap chain G_1..G_depth with an LLG certificate for each
// consecutive interval. Stages are deepened until the selection and the
// certificate are both sound; NotCertifiable if the budget runs out first.
std::vector<ChainLink> countability_certificate(const CentralSpec& spec, int depth, Budget budget = {});

struct SteinhausRow {
    int n = 0;
    Rational central;                 // m(missing_outer ∩ [-1/2, 1/2])
    std::array<Rational, 4> zones;    // [-1,-3/4], [-3/4,-1/2], [1/2,3/4], [3/4,1]
    Rational missing_total;           // m(missing_outer)
    Rational outer_measure;           // m(outer)
};

std::vector<SteinhausRow> steinhaus_suite(const std::vector<DiffBracket>& brackets);

}  // namespace cantorgap

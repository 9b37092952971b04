#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cantorgap/cantor.hpp"
#include "cantorgap/difference.hpp"
#include "cantorgap/family.hpp"
#include "json.hpp"

namespace cantorgap {

// Pass and Fail are hard verdicts. Flag marks an empirical threshold that was
// missed; it is reported but does not fail the run.
enum class Status { Pass, Fail, Flag };

const char* status_name(Status s);

struct Assertion {
    std::string name;
    Status status = Status::Pass;
    nlohmann::json detail;  // witnesses on failure, checked values otherwise
};

struct Verdict {
    std::string theorem;
    FamilySpec family;
    int max_stage = 0;
    std::vector<Assertion> assertions;
    nlohmann::json payload;  // certificates for offline re-checking

    bool passed() const;
    bool flagged() const;
    nlohmann::json to_json() const;
};

// Selector does not fit the family (for example t13 on a ratio below 1/3).
class IncompatibleSelector : public SpecError {
public:
    using SpecError::SpecError;
};

struct VerifyOptions {
    int max_stage = 8;
    Budget budget;
    int chain_depth = 6;  // tamc
    int t13_k_max = 6;    // t13
};

const std::vector<std::string>& verify_selectors();

Verdict verify(const std::string& selector, const FamilySpec& spec, const VerifyOptions& opts);

Verdict verify_ccp(const FamilySpec& spec, const VerifyOptions& opts);
Verdict verify_t13(const FamilySpec& spec, const VerifyOptions& opts);
Verdict verify_ts3(const FamilySpec& spec, const VerifyOptions& opts);
Verdict verify_tab(const FamilySpec& spec, const VerifyOptions& opts);
Verdict verify_cspm(const FamilySpec& spec, const VerifyOptions& opts);
Verdict verify_tamc(const FamilySpec& spec, const VerifyOptions& opts);
Verdict verify_steinhaus(const FamilySpec& spec, const VerifyOptions& opts);

// Edge-strip width for the perturbed family at stage n: the length of the
// rightmost component of stage n - 2 (1 for n < 2).
Rational ts3_strip_width(const PerturbedSpec& spec, int n);

// Exact lower bound for m(B) of the limit set of a scaled central set,
// scale * prod_{j<=n} (1 - b_j) * (1 - sum_{j>n} b_j). Only the geometric
// rule with factor < 1 has a positive bound; otherwise nullopt.
std::optional<Rational> fat_measure_lower_bound(const ScaledCentral& b, int n);

// (−|G|, 0) ∪ (0, |G|) ⊆ inner and 0 ∉ inner for the earliest gap G.
// nullopt when the stage has no gaps.
std::optional<bool> isolated_zero_holds(const CantorStage& stage, const IntervalUnion& inner);

// Per-stage measure table used by measure-scan.
struct MeasureRow {
    int n = 0;
    Rational set_measure;
    Rational max_component;
    std::size_t components = 0;
    Rational missing_central;
    Rational missing_total;
    Rational outer_measure;
};

std::vector<MeasureRow> measure_scan(const FamilySpec& spec, int max_stage, Budget budget = {});

}  // namespace cantorgap

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cantorgap/cantor.hpp"
#include "json.hpp"

namespace cantorgap {

// One construction family with its parameters, as read from a spec file.
struct FamilySpec {
    Family family = Family::Central;
    CentralSpec central = CentralSpec::constant(Rational(1, 3));
    PerturbedSpec perturbed;
    CompositeSpec composite = CompositeSpec::builtin();
    GreedySpec greedy;

    static FamilySpec ternary() { return {}; }
    static FamilySpec central_constant(Rational a);
    static FamilySpec perturbed_default();
    static FamilySpec tab_builtin();
    static FamilySpec greedy_default();

    void validate() const;
    bool is_tree() const { return family == Family::Central || family == Family::Perturbed; }
    bool is_composite() const { return !is_tree(); }

    CantorStage stage(int n, Budget budget = {}) const;
    std::vector<CantorStage> stages(int max_n, Budget budget = {}) const;

    // B of a composite family; throws std::logic_error for tree families.
    const ScaledCentral& b_source() const;
};

// Built-in families: ternary, central 1/2, perturbed, tab pair, greedy fat composite.
std::vector<std::pair<std::string, FamilySpec>> builtin_families();

// Rationals are written as "p/q" or "p" strings; JSON integers are also
// accepted. Floats are rejected.
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const FamilySpec& spec);

// Errors carry "line L: " when the offending key can be located in `source`.
FamilySpec family_from_json(const nlohmann::json& j, std::string_view source = {});
FamilySpec parse_family_spec(std::string_view text);

}  // namespace cantorgap

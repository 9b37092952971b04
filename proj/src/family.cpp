#include "cantorgap/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cantorgap {

using nlohmann::json;

FamilySpec FamilySpec::central_constant(Rational a) {
    FamilySpec s;
    s.central = CentralSpec::constant(std::move(a));
    return s;
}

FamilySpec FamilySpec::perturbed_default() {
    FamilySpec s;
    s.family = Family::Perturbed;
    return s;
}

FamilySpec FamilySpec::tab_builtin() {
    FamilySpec s;
    s.family = Family::Tab;
    return s;
}

FamilySpec FamilySpec::greedy_default() {
    FamilySpec s;
    s.family = Family::Greedy;
    return s;
}

namespace {

void validate_half(const ScaledCentral& s, const char* which) {
    s.spec.validate();
    if (s.scale != Rational(1, 2)) {
        throw SpecError(std::string(which) + " must be scaled into [0,1/2] (scale 1/2), got " + s.scale.str());
    }
}

}  // namespace

void FamilySpec::validate() const {
    switch (family) {
        case Family::Central: central.validate(); break;
        case Family::Perturbed:
            perturbed.validate();
            perturbed_gap_lengths(perturbed, 12);
            break;
        case Family::Tab:
            validate_half(composite.a, "a");
            validate_half(composite.b, "b");
            break;
        case Family::Greedy:
            validate_half(greedy.b, "b");
            if (!(Rational(0) < greedy.margin_base && greedy.margin_base < Rational(1))) {
                throw SpecError("margin_base out of (0,1): " + greedy.margin_base.str());
            }
            if (!(greedy.dense_lo < greedy.dense_hi)) throw SpecError("dense range is empty");
            if (greedy.max_attempts_per_stage < 1 || greedy.points_per_stage < 1 || greedy.lookahead < 0 ||
                greedy.lookahead_depth < 0) {
                throw SpecError("greedy counts must be positive");
            }
            break;
    }
}

CantorStage FamilySpec::stage(int n, Budget budget) const {
    switch (family) {
        case Family::Central: return central_stage(central, n, budget);
        case Family::Perturbed: return perturbed_stage(perturbed, n, budget);
        case Family::Tab: return tab_stage(composite, n, budget);
        case Family::Greedy: return greedy_stage(greedy, n, budget).c;
    }
    throw std::logic_error("unknown family");
}

std::vector<CantorStage> FamilySpec::stages(int max_n, Budget budget) const {
    std::vector<CantorStage> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out.push_back(stage(n, budget));
    return out;
}

const ScaledCentral& FamilySpec::b_source() const {
    if (family == Family::Tab) return composite.b;
    if (family == Family::Greedy) return greedy.b;
    throw std::logic_error(family_name(family) + " family has no B component");
}

std::vector<std::pair<std::string, FamilySpec>> builtin_families() {
    return {{"central-1/3", FamilySpec::ternary()},
            {"central-1/2", FamilySpec::central_constant(Rational(1, 2))},
            {"perturbed", FamilySpec::perturbed_default()},
            {"tab", FamilySpec::tab_builtin()},
            {"greedy", FamilySpec::greedy_default()}};
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw SpecError("rationals must be written as \"p/q\" strings, got " + j.dump());
}

namespace {

json rat(const Rational& r) { return r.str(); }

json central_to_json(const CentralSpec& c) {
    switch (c.rule) {
        case CentralSpec::Rule::Constant: return {{"kind", "constant"}, {"value", rat(c.tail)}};
        case CentralSpec::Rule::List: {
            json prefix = json::array();
            for (const auto& a : c.prefix) prefix.push_back(rat(a));
            return {{"kind", "list"}, {"prefix", prefix}, {"tail", rat(c.tail)}};
        }
        case CentralSpec::Rule::Geometric:
            return {{"kind", "geometric"}, {"first", rat(c.first)}, {"factor", rat(c.factor)}};
    }
    return {};
}

json scaled_to_json(const ScaledCentral& s) { return {{"ratios", central_to_json(s.spec)}, {"scale", rat(s.scale)}}; }

// Finds the line of a key path in the source text, for error messages.
class Locator {
public:
    explicit Locator(std::string_view source) : source_(source) {}

    std::string where(const std::vector<std::string>& path) const {
        if (source_.empty() || path.empty()) return {};
        std::size_t pos = 0;
        bool located = false;
        for (const auto& key : path) {
            const std::size_t found = source_.find("\"" + key + "\"", pos);
            if (found == std::string_view::npos) break;
            pos = found;
            located = true;
        }
        if (!located) return {};
        const auto line = 1 + std::count(source_.begin(), source_.begin() + static_cast<std::ptrdiff_t>(pos), '\n');
        return "line " + std::to_string(line) + ": ";
    }

private:
    std::string_view source_;
};

class Reader {
public:
    Reader(const json& j, const Locator& loc, std::vector<std::string> path)
        : j_(j), loc_(loc), path_(std::move(path)) {
        if (!j_.is_object()) fail("expected an object");
    }

    [[noreturn]] void fail(const std::string& msg, const std::string& key = {}) const {
        std::vector<std::string> p = path_;
        if (!key.empty()) p.push_back(key);
        throw SpecError(loc_.where(p) + msg);
    }

    bool has(const std::string& key) const {
        used_.insert(key);
        return j_.contains(key);
    }

    Rational rational(const std::string& key) const {
        used_.insert(key);
        try {
            return rational_from_json(j_.at(key));
        } catch (const json::out_of_range&) {
            fail("missing key \"" + key + "\"");
        } catch (const std::invalid_argument& e) {
            fail(std::string(e.what()) + " (key \"" + key + "\")", key);
        }
    }

    Rational rational_or(const std::string& key, const Rational& fallback) const {
        return has(key) ? rational(key) : fallback;
    }

    int integer_or(const std::string& key, int fallback) const {
        if (!has(key)) return fallback;
        const json& v = j_.at(key);
        if (!v.is_number_integer()) fail("\"" + key + "\" must be an integer", key);
        return v.get<int>();
    }

    Reader child(const std::string& key) const {
        used_.insert(key);
        if (!j_.contains(key)) fail("missing key \"" + key + "\"");
        std::vector<std::string> p = path_;
        p.push_back(key);
        return Reader(j_.at(key), loc_, p);
    }

    const json& raw(const std::string& key) const {
        used_.insert(key);
        return j_.at(key);
    }

    void finish() const {
        for (const auto& [key, value] : j_.items()) {
            if (!used_.count(key)) fail("unknown key \"" + key + "\"", key);
        }
    }

    template <typename F>
    void guard(const std::string& key, F&& f) const {
        try {
            f();
        } catch (const SpecError& e) {
            const std::string msg = e.what();
            if (msg.rfind("line ", 0) == 0) throw;
            fail(msg, key);
        }
    }

private:
    const json& j_;
    const Locator& loc_;
    std::vector<std::string> path_;
    mutable std::set<std::string> used_;
};

CentralSpec read_ratio_rule(const Reader& r) {
    if (r.has("ratio")) {
        if (r.has("ratios")) r.fail("give either \"ratio\" or \"ratios\", not both", "ratios");
        CentralSpec spec = CentralSpec::constant(r.rational("ratio"));
        r.guard("ratio", [&] { spec.validate(); });
        return spec;
    }
    if (!r.has("ratios")) r.fail("missing key \"ratio\" or \"ratios\"");
    const Reader rr = r.child("ratios");
    if (!rr.has("kind")) rr.fail("missing key \"kind\"");
    const json& kind_j = rr.raw("kind");
    const std::string kind = kind_j.is_string() ? kind_j.get<std::string>() : "";
    CentralSpec spec;
    if (kind == "constant") {
        spec = CentralSpec::constant(rr.rational("value"));
    } else if (kind == "list") {
        if (!rr.has("prefix") || !rr.raw("prefix").is_array()) rr.fail("\"prefix\" must be an array", "prefix");
        std::vector<Rational> prefix;
        for (const auto& v : rr.raw("prefix")) {
            try {
                prefix.push_back(rational_from_json(v));
            } catch (const std::invalid_argument& e) {
                rr.fail(e.what(), "prefix");
            }
        }
        spec = CentralSpec::list(std::move(prefix), rr.rational("tail"));
    } else if (kind == "geometric") {
        spec = CentralSpec::geometric(rr.rational("first"), rr.rational("factor"));
    } else {
        rr.fail("unknown ratio rule kind " + kind_j.dump() + " (expected constant, list or geometric)", "kind");
    }
    rr.finish();
    rr.guard("kind", [&] { spec.validate(); });
    return spec;
}

ScaledCentral read_scaled(const Reader& r, const ScaledCentral& fallback) {
    ScaledCentral s = fallback;
    if (r.has("ratio") || r.has("ratios")) s.spec = read_ratio_rule(r);
    s.scale = r.rational_or("scale", s.scale);
    r.finish();
    return s;
}

}  // namespace

json family_to_json(const FamilySpec& spec) {
    json j;
    j["family"] = family_name(spec.family);
    switch (spec.family) {
        case Family::Central: j["ratios"] = central_to_json(spec.central); break;
        case Family::Perturbed:
            j["c1"] = rat(spec.perturbed.c1);
            j["shrink"] = rat(spec.perturbed.shrink);
            j["interior_gap_fraction"] = rat(spec.perturbed.interior_gap_fraction);
            break;
        case Family::Tab:
            j["a"] = scaled_to_json(spec.composite.a);
            j["b"] = scaled_to_json(spec.composite.b);
            break;
        case Family::Greedy: {
            const GreedySpec& g = spec.greedy;
            j["b"] = scaled_to_json(g.b);
            j["dense"] = {{"lo", rat(g.dense_lo)}, {"hi", rat(g.dense_hi)}};
            j["margin_base"] = rat(g.margin_base);
            j["max_attempts"] = g.max_attempts_per_stage;
            j["points_per_stage"] = g.points_per_stage;
            j["lookahead"] = g.lookahead;
            j["lookahead_depth"] = g.lookahead_depth;
            break;
        }
    }
    return j;
}

FamilySpec family_from_json(const json& j, std::string_view source) {
    const Locator loc(source);
    const Reader r(j, loc, {});
    if (!r.has("family")) r.fail("missing key \"family\"");
    const json& fam_j = r.raw("family");
    const std::string fam = fam_j.is_string() ? fam_j.get<std::string>() : "";
    FamilySpec spec;
    if (fam == "central") {
        spec.family = Family::Central;
        spec.central = read_ratio_rule(r);
    } else if (fam == "perturbed") {
        spec.family = Family::Perturbed;
        PerturbedSpec& p = spec.perturbed;
        p.c1 = r.rational_or("c1", p.c1);
        p.shrink = r.rational_or("shrink", p.shrink);
        p.interior_gap_fraction = r.rational_or("interior_gap_fraction", p.interior_gap_fraction);
    } else if (fam == "tab") {
        spec.family = Family::Tab;
        if (r.has("a")) spec.composite.a = read_scaled(r.child("a"), spec.composite.a);
        if (r.has("b")) spec.composite.b = read_scaled(r.child("b"), spec.composite.b);
    } else if (fam == "greedy") {
        spec.family = Family::Greedy;
        GreedySpec& g = spec.greedy;
        if (r.has("b")) g.b = read_scaled(r.child("b"), g.b);
        if (r.has("dense")) {
            const Reader d = r.child("dense");
            g.dense_lo = d.rational_or("lo", g.dense_lo);
            g.dense_hi = d.rational_or("hi", g.dense_hi);
            d.finish();
        }
        g.margin_base = r.rational_or("margin_base", g.margin_base);
        g.max_attempts_per_stage = r.integer_or("max_attempts", g.max_attempts_per_stage);
        g.points_per_stage = r.integer_or("points_per_stage", g.points_per_stage);
        g.lookahead = r.integer_or("lookahead", g.lookahead);
        g.lookahead_depth = r.integer_or("lookahead_depth", g.lookahead_depth);
    } else {
        r.fail("unknown family " + fam_j.dump() + " (expected central, perturbed, tab or greedy)", "family");
    }
    r.finish();
    r.guard("family", [&] { spec.validate(); });
    return spec;
}

FamilySpec parse_family_spec(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        const auto close = msg.find("] ");
        if (close != std::string::npos) msg = msg.substr(close + 2);
        throw SpecError(msg);
    }
    return family_from_json(j, text);
}

}  // namespace cantorgap

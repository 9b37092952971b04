#include "cantorgap/json_io.hpp"

#include <algorithm>

#include "cantorgap/family.hpp"

namespace cantorgap {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const Interval& iv) {
    return {{"lo", iv.lo().str()}, {"hi", iv.hi().str()}, {"lo_closed", iv.lo_closed()}, {"hi_closed", iv.hi_closed()}};
}

json to_json(const IntervalUnion& u) {
    json out = json::array();
    for (const auto& p : u) out.push_back(to_json(p));
    return out;
}

json to_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

json to_json(const GapRecord& g) {
    return {{"address", g.address.label()},
            {"lo", g.interval.lo().str()},
            {"hi", g.interval.hi().str()},
            {"stage_created", g.stage_created}};
}

json to_json(const CantorStage& stage) {
    json gaps = json::array();
    for (const auto& g : stage.gaps) gaps.push_back(to_json(g));
    json j = {{"family", family_name(stage.family)},
              {"n", stage.n},
              {"components", to_json(stage.components)},
              {"gaps", gaps},
              {"endpoints", to_json(stage.endpoints)},
              {"measure", measure(stage.components).str()},
              {"max_component_length", max_component_length(stage.components).str()},
              {"diagnostics", stage.diagnostics}};
    if (stage.is_tree()) {
        json addr = json::array();
        for (const auto& a : stage.addresses) addr.push_back(a.label());
        j["addresses"] = addr;
    }
    return j;
}

json split_json(const IntervalUnion& u) {
    json points = json::array();
    json intervals = json::array();
    for (const auto& p : u) {
        if (p.is_point()) {
            points.push_back(p.lo().str());
        } else {
            intervals.push_back(to_json(p));
        }
    }
    return {{"points", points}, {"intervals", intervals}};
}

json to_json(const DiffBracket& b) {
    return {{"n", b.n},
            {"inner", to_json(b.inner)},
            {"outer", to_json(b.outer)},
            {"missing_outer", split_json(b.missing_outer)},
            {"missing_inner", split_json(b.missing_inner)},
            {"measure_inner", measure(b.inner).str()},
            {"measure_outer", measure(b.outer).str()},
            {"measure_missing_outer", measure(b.missing_outer).str()},
            {"point_parts_missing_outer", point_part_count(b.missing_outer)}};
}

json to_json(const LlgCertificate& c) {
    return {{"gap", to_json(c.gap)},
            {"a", c.a.str()},
            {"b", c.b.str()},
            {"mode", llg_mode_name(c.mode)},
            {"certified_interval", to_json(c.certified_interval)},
            {"exceptions", to_json(c.exceptions)},
            {"hypotheses",
             {{"stage", c.stage_n},
              {"gap_length", c.gap.interval.length().str()},
              {"max_component_in_range", c.max_component_in_range.str()},
              {"max_recorded_gap_in_range", c.max_recorded_gap_in_range.str()},
              {"recorded_gaps_in_range", c.recorded_gaps_in_range}}}};
}

json to_json(const LsCheck& c, bool embed_c_stages) {
    if (c.violation) {
        return {{"passed", false}, {"violation", {{"n", c.violation->n}, {"witness", c.violation->witness.str()}}}};
    }
    const LsCertificate& cert = *c.certificate;
    json c_stages = json::array();
    json y_stages = json::array();
    if (embed_c_stages) {
        for (const auto& s : cert.c_stages) c_stages.push_back(to_json(s));
    }
    for (const auto& s : cert.y_stages) y_stages.push_back(to_json(s));
    return {{"passed", true},
            {"n_checked", cert.n_checked},
            {"by_construction", cert.by_construction},
            {"y", to_json(cert.y)},
            {"hypotheses", embed_c_stages ? json{{"c_stages", c_stages}, {"y_stages", y_stages}}
                                          : json{{"y_stages", y_stages}}}};
}

json to_json(const ChainLink& link) {
    return {{"gap", to_json(link.gap)},
            {"stage_used", link.stage_used},
            {"exception_count", link.certificate.exceptions.size()},
            {"certificate", to_json(link.certificate)}};
}

json to_json(const SteinhausRow& row) {
    return {{"n", row.n},
            {"central", row.central.str()},
            {"zones",
             {{"[-1,-3/4]", row.zones[0].str()},
              {"[-3/4,-1/2]", row.zones[1].str()},
              {"[1/2,3/4]", row.zones[2].str()},
              {"[3/4,1]", row.zones[3].str()}}},
            {"missing_total", row.missing_total.str()},
            {"outer_measure", row.outer_measure.str()}};
}

Interval interval_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("interval must be an object");
    return Interval(rational_from_json(j.at("lo")), rational_from_json(j.at("hi")), j.value("lo_closed", true),
                    j.value("hi_closed", true));
}

IntervalUnion union_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("interval union must be an array");
    std::vector<Interval> raw;
    for (const auto& p : j) raw.push_back(interval_from_json(p));
    return normalize(std::move(raw));
}

std::vector<GapRow> gap_table(const CantorStage& stage) {
    std::vector<GapRow> rows;
    rows.reserve(stage.gaps.size());
    std::vector<const GapRecord*> order;
    for (const auto& g : stage.gaps) order.push_back(&g);
    std::stable_sort(order.begin(), order.end(),
                     [](const GapRecord* x, const GapRecord* y) { return x->stage_created < y->stage_created; });
    for (const GapRecord* gp : order) {
        const GapRecord& g = *gp;
        rows.push_back({stage.is_tree() ? g.address.label() : std::string(), g.interval.lo(), g.interval.hi(),
                        g.stage_created});
    }
    return rows;
}

}  // namespace cantorgap

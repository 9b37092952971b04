#pragma once

#include <string>
#include <vector>

#include "cantorgap/cantor.hpp"
#include "cantorgap/difference.hpp"
#include "cantorgap/interval.hpp"
#include "json.hpp"

namespace cantorgap {

// Shared JSON dialect: rationals as canonical "p/q" strings, intervals as
// {lo, hi, lo_closed, hi_closed}, unions as arrays of intervals.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Interval& iv);
nlohmann::json to_json(const IntervalUnion& u);
nlohmann::json to_json(const std::vector<Rational>& values);
nlohmann::json to_json(const GapRecord& g);
nlohmann::json to_json(const CantorStage& stage);
nlohmann::json to_json(const DiffBracket& b);
nlohmann::json to_json(const LlgCertificate& c);
// C stages are left out when the caller records them once elsewhere.
nlohmann::json to_json(const LsCheck& c, bool embed_c_stages = true);
nlohmann::json to_json(const ChainLink& link);
nlohmann::json to_json(const SteinhausRow& row);

// Point parts and interval parts listed separately.
nlohmann::json split_json(const IntervalUnion& u);

Interval interval_from_json(const nlohmann::json& j);
IntervalUnion union_from_json(const nlohmann::json& j);

// Gap table rows: address ("ε" for the root, "" for composite stages), lo, hi, stage_created.
struct GapRow {
    std::string address;
    Rational lo;
    Rational hi;
    int stage_created;
};
// Ordered by creation stage, then position.
std::vector<GapRow> gap_table(const CantorStage& stage);

}  // namespace cantorgap

#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>

#include "gapvogel/blowup.hpp"
#include "gapvogel/errors.hpp"
#include "gapvogel/liv.hpp"

namespace gapvogel {

using json = nlohmann::json;

// Input document: {"ring": [...], "tuple": [...], "M": [{"mult": m, "prime": [...]}], "g": ..., "a": ...,
// "j": ..., "j_range": [lo, hi], "point": [...] or "point_ideal": [...], "seed": ...}.
struct Problem {
    RingPtr ring;
    Tuple tuple;
    Cycle M;
    std::optional<Polynomial> g;
    long a = 1;
    unsigned j = 1;
    unsigned j_from = 1, j_to = 5;
    std::optional<Point> point;
    std::uint64_t seed = 0;
};

Problem parse_problem(const json& doc);
Point parse_point(const std::string& csv);

json to_json(const Polynomial& p);
json to_json(const Ideal& I);
json to_json(const Cycle& C);
json to_json(const Tuple& f);
json to_json(const Point& p);
json to_json(const VogelTower& T);
json to_json(const DimensionReport& R);
json to_json(const ReorganizeResult& R);
json to_json(const GapRatioReport& R);
json to_json(const LivReport& R);
json to_json(const ReverseEstimate& R);
json to_json(const CylinderReport& R);
json to_json(const std::vector<BlowupChart>& charts);
json to_json(const SegreVogelReport& R);
json error_json(const Error& e);

// Canonical text: sorted keys, two-space indentation, trailing newline.
std::string dump(const json& j);

}  // namespace gapvogel

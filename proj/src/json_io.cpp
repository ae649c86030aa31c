#include "gapvogel/json_io.hpp"

#include <sstream>

#include "gapvogel/ideal_ops.hpp"

namespace gapvogel {

namespace {

const json& need(const json& doc, const char* key) {
    if (!doc.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
    return doc.at(key);
}

std::string text(const json& v, const char* what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must be a string");
}

Polynomial poly(const json& v, const RingPtr& r) { return parse_polynomial(text(v, "polynomial"), r); }

Point point_from(const json& v) {
    Point p;
    for (const auto& c : v) p.push_back(parse_scalar(text(c, "coordinate")));
    return p;
}

json scalar(const Scalar& s) { return scalar_to_string(s); }

json opt_long(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }
json opt_unsigned(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

json flags_json(const LevelFlags& f) {
    return {{"pure_pi", f.pure_pi}, {"pi_eq_tilde", f.pi_eq_tilde}, {"pi_eq_hat", f.pi_eq_hat},
            {"pure_delta", f.pure_delta}, {"hat_cycle_agrees", f.hat_cycle_agrees}};
}

}  // namespace

Point parse_point(const std::string& csv) {
    Point p;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(parse_scalar(item));
    if (p.empty()) throw Error(ErrorCode::InvalidInput, "empty point");
    return p;
}

Problem parse_problem(const json& doc) {
    if (!doc.is_object()) throw Error(ErrorCode::InvalidInput, "problem must be a JSON object");
    std::vector<std::string> names;
    for (const auto& v : need(doc, "ring")) names.push_back(text(v, "variable"));
    if (names.empty()) throw Error(ErrorCode::InvalidInput, "ring needs at least one variable");
    const RingPtr ring = Ring::make(names);
    Problem P{ring, {}, Cycle(ring), std::nullopt, 1, 1, 1, 5, std::nullopt, 0};
    for (const auto& v : need(doc, "tuple")) P.tuple.push_back(poly(v, P.ring));
    if (P.tuple.empty()) throw Error(ErrorCode::InvalidInput, "tuple needs at least one entry");

    const char* mkey = doc.contains("M") ? "M" : "cycle_M";
    if (doc.contains(mkey)) {
        for (const auto& c : doc.at(mkey)) {
            std::vector<Polynomial> gens;
            for (const auto& g : need(c, "prime")) gens.push_back(poly(g, P.ring));
            Ideal I(P.ring, gens);
            const auto primes = I.is_unit() ? std::vector<PrimeComponent>{} : minimal_primes(I);
            if (primes.size() != 1 || primes.front().prime != I)
                throw Error(ErrorCode::InvalidInput, "components of M must be prime ideals", I.canonical_strings());
            const long m = c.contains("mult") ? c.at("mult").get<long>() : 1;
            if (m == 0) throw Error(ErrorCode::InvalidInput, "multiplicities of M must be non-zero");
            P.M.add(primes.front(), m);
        }
        require_valid_m(P.M);
    } else {
        P.M = whole_space(P.ring);
    }
    if (doc.contains("g")) P.g = poly(doc.at("g"), P.ring);
    if (doc.contains("a")) P.a = doc.at("a").get<long>();
    if (doc.contains("j")) P.j = doc.at("j").get<unsigned>();
    if (doc.contains("j_range")) {
        P.j_from = doc.at("j_range").at(0).get<unsigned>();
        P.j_to = doc.at("j_range").at(1).get<unsigned>();
    }
    if (doc.contains("point")) P.point = point_from(doc.at("point"));
    if (doc.contains("point_ideal")) {
        std::vector<Polynomial> gens;
        for (const auto& g : doc.at("point_ideal")) gens.push_back(poly(g, P.ring));
        P.point = point_of(Ideal(P.ring, gens));
    }
    if (P.point && P.point->size() != P.ring->nvars())
        throw Error(ErrorCode::InvalidInput, "point has the wrong number of coordinates");
    if (doc.contains("seed")) P.seed = doc.at("seed").get<std::uint64_t>();
    return P;
}

json to_json(const Polynomial& p) { return p.to_string(); }

json to_json(const Ideal& I) { return I.canonical_strings(); }

json to_json(const Cycle& C) {
    json out = json::array();
    for (const auto& t : C.terms())
        out.push_back({{"mult", t.mult}, {"dim", t.comp.dim}, {"prime", to_json(t.comp.prime)}});
    return out;
}

json to_json(const Tuple& f) {
    json out = json::array();
    for (const auto& p : f) out.push_back(p.to_string());
    return out;
}

json to_json(const Point& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(scalar(c));
    return out;
}

json to_json(const ReorganizeResult& R) {
    return {{"tuple", to_json(R.tuple)}, {"coefficients", R.coefficients}, {"attempts", R.attempts}};
}

json to_json(const VogelTower& T) {
    json comps = json::array();
    for (const auto& c : T.components) {
        json levels = json::array();
        for (const auto& L : c.levels)
            levels.push_back({{"i", L.i},
                              {"pi_hat", to_json(L.pi_hat)},
                              {"delta", to_json(L.delta)},
                              {"pi_scheme", to_json(L.pi_scheme)},
                              {"pi_tilde_scheme", to_json(L.pi_tilde_scheme)},
                              {"pi_hat_scheme", to_json(L.pi_hat_scheme)},
                              {"flags", flags_json(L.flags)}});
        comps.push_back({{"mult", c.mult},
                         {"prime", to_json(c.component.prime)},
                         {"dim", c.d},
                         {"tuple", to_json(c.tuple)},
                         {"levels", levels},
                         {"improper", c.improper ? json(*c.improper) : json(nullptr)},
                         {"correct_dimension", c.correct_dimension()}});
    }
    json totals = json::array();
    for (int i = T.top(); i >= T.bottom() && i >= 0; --i)
        totals.push_back({{"i", i}, {"pi_hat", to_json(T.pi_hat(i))}, {"delta", to_json(T.delta(i))}});
    return {{"components", comps},
            {"totals", totals},
            {"correct_dimension", T.correct_dimension()},
            {"seed", T.seed},
            {"reorganization", T.reorganization ? to_json(*T.reorganization) : json(nullptr)}};
}

json to_json(const DimensionReport& R) {
    json comps = json::array();
    for (const auto& c : R.components) {
        json levels = json::array();
        for (const auto& L : c.levels)
            levels.push_back({{"i", L.i}, {"pure_pi", L.pure_pi}, {"pi_eq_tilde", L.pi_eq_tilde},
                              {"pi_eq_hat", L.pi_eq_hat}});
        comps.push_back({{"prime", to_json(c.component.prime)}, {"dim", c.component.dim}, {"levels", levels}});
    }
    return {{"components", comps},
            {"i_pure_pi", R.i_holds},
            {"ii_pi_eq_tilde", R.ii_holds},
            {"iii_pi_eq_hat", R.iii_holds},
            {"iv_pure_vogel_sets", R.iv_holds},
            {"implications_hold", R.implications_hold()}};
}

json to_json(const GapRatioReport& R) {
    json rs = json::array();
    for (const auto& r : R.ratios)
        rs.push_back({{"component", r.component},
                      {"eta", to_json(r.eta.prime)},
                      {"against_f", r.against_f},
                      {"against_g", opt_long(r.against_g)},
                      {"ratio", scalar(r.ratio)}});
    return {{"point", to_json(R.point)}, {"ratios", rs}, {"max_ratio", scalar(R.max_ratio)}};
}

json to_json(const LivReport& R) {
    return {{"h", to_json(R.h)},
            {"a", R.a},
            {"j", R.j},
            {"gap_ratios", to_json(R.ratios)},
            {"j_at_least_max_ratio", R.j_at_least_max},
            {"j_above_max_ratio", R.j_above_max},
            {"sufficient_bound", R.sufficient_bound},
            {"g_proper_on_vogel_cycles", R.g_proper},
            {"i_sets_equal", R.sets_equal},
            {"ii_dimension_drops", R.dimension_drops},
            {"iii_h_cycles_defined", R.h_defined},
            {"iv_delta0_identity", R.delta0_identity},
            {"iv_higher_identities", R.higher_identities},
            {"delta0_h", to_json(R.delta0_h)},
            {"delta0_predicted", to_json(R.delta0_predicted)},
            {"pi_hat1_meets_h_like_delta0", R.pi_hat1_identity},
            {"min_inequality", R.min_inequality},
            {"holds", R.holds()}};
}

json to_json(const ReverseEstimate& R) {
    json rows = json::array();
    for (const auto& r : R.rows)
        rows.push_back({{"j", r.j},
                        {"delta0_h", r.delta0_h},
                        {"difference", opt_long(r.difference)},
                        {"pi_hat_term", r.pi_hat_term},
                        {"bound_certifies", r.bound_certifies},
                        {"difference_matches", r.difference_matches},
                        {"sets_equal", r.sets_equal}});
    return {{"delta1_dot_g", R.delta1_dot_g},
            {"c", R.c},
            {"rows", rows},
            {"certified_by_bound", opt_unsigned(R.certified_by_bound)},
            {"certified_by_count", opt_unsigned(R.certified_by_count)},
            {"certified_from", opt_unsigned(R.certified_from)},
            {"delta0_f", opt_long(R.delta0_f)}};
}

json to_json(const CylinderReport& R) {
    json levels = json::array();
    for (const auto& L : R.levels)
        levels.push_back({{"i", L.i}, {"lhs", to_json(L.lhs)}, {"rhs", to_json(L.rhs)}, {"equal", L.equal}});
    return {{"ring", R.ring->names()}, {"h", to_json(R.h)}, {"levels", levels}, {"h_defined", R.h_defined},
            {"holds", R.holds()}};
}

json to_json(const std::vector<BlowupChart>& charts) {
    json out = json::array();
    for (const auto& c : charts)
        out.push_back({{"chart", c.j},
                       {"ring", c.ring->names()},
                       {"total_ideal", to_json(c.total_ideal)},
                       {"total", to_json(c.total)},
                       {"exceptional", to_json(c.exceptional)}});
    return out;
}

json to_json(const SegreVogelReport& R) {
    json levels = json::array();
    for (const auto& L : R.levels)
        levels.push_back({{"i", L.i},
                          {"m", L.m},
                          {"e_proper", L.e_proper},
                          {"bl_proper", L.bl_proper},
                          {"pushed_bl", to_json(L.pushed_bl)},
                          {"pushed_e", to_json(L.pushed_e)},
                          {"pi_hat", to_json(L.pi_hat)},
                          {"delta", to_json(L.delta)},
                          {"pi_hat_equal", L.pi_hat_equal},
                          {"delta_equal", L.delta_equal}});
    return {{"levels", levels}, {"hypothesis", R.hypothesis}, {"holds", R.holds()}};
}

json error_json(const Error& e) {
    json out = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    out["offending_ideal"] = e.offending_ideal().empty() ? json(nullptr) : json(e.offending_ideal());
    if (const auto* cd = dynamic_cast<const CorrectDimensionViolated*>(&e)) {
        out["level"] = cd->level();
        out["object"] = cd->object();
    }
    return {{"error", out}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gapvogel

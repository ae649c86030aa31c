#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "gapvogel/json_io.hpp"

using namespace gapvogel;

namespace {

struct Flags {
    std::string input;
    std::optional<std::uint64_t> seed;
    bool strict = false, auto_reorganize = false;
    int max_retries = 32;
    std::string output = "json";
    std::string point;
    std::optional<unsigned> j;
    std::optional<long> a;
};

struct Outcome {
    json result;
    int code = 0;
};

void render(const json& v, int indent, std::ostream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it->is_structured() && !it->empty()) {
                os << pad << it.key() << ":\n";
                render(*it, indent + 2, os);
            } else {
                os << pad << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
            }
        }
    } else if (v.is_array()) {
        const bool flat = std::all_of(v.begin(), v.end(), [](const json& e) { return !e.is_structured(); });
        if (flat) {
            os << pad << v.dump() << "\n";
            return;
        }
        for (const auto& e : v) {
            os << pad << "-\n";
            render(e, indent + 2, os);
        }
    } else {
        os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

void emit(const json& doc, const Flags& fl) {
    if (fl.output == "pretty")
        render(doc, 0, std::cout);
    else
        std::cout << dump(doc);
}

Point base_point(const Problem& P, const Flags& fl) {
    if (!fl.point.empty()) {
        Point p = parse_point(fl.point);
        if (p.size() != P.ring->nvars()) throw Error(ErrorCode::InvalidInput, "point has the wrong number of coordinates");
        return p;
    }
    if (P.point) return *P.point;
    return Point(P.ring->nvars(), Scalar(0));
}

const Polynomial& need_g(const Problem& P) {
    if (!P.g) throw Error(ErrorCode::InvalidInput, "this command needs 'g' in the input");
    return *P.g;
}

Outcome cmd_vogel(const Problem& P, const Flags& fl, Rng& rng) {
    TowerOptions opt;
    opt.mode = fl.auto_reorganize ? TowerMode::AutoReorganize : TowerMode::Strict;
    opt.max_retries = fl.max_retries;
    VogelTower T = vogel_tower(P.tuple, P.M, rng, opt);
    return {to_json(T), T.correct_dimension() ? 0 : 2};
}

Outcome cmd_gap(const Problem& P, const Flags&, Rng&) {
    json comps = json::array();
    for (const auto& t : P.M.terms()) {
        const int d = t.comp.dim;
        const Tuple g = d > 0 ? normalize_tuple(P.tuple, d) : P.tuple;
        const int k = static_cast<int>(g.size()) - 1;
        json levels = json::array();
        for (int i = d; i >= std::max(0, d - (k + 1)); --i)
            levels.push_back({{"i", i},
                              {"pi", to_json(gap_scheme(g, t.comp.prime, d, i, GapFlavor::Plain))},
                              {"pi_tilde", to_json(gap_scheme(g, t.comp.prime, d, i, GapFlavor::Modified))},
                              {"pi_hat", to_json(gap_scheme(g, t.comp.prime, d, i, GapFlavor::Inductive))}});
        comps.push_back({{"prime", to_json(t.comp.prime)}, {"dim", d}, {"tuple", to_json(g)}, {"levels", levels}});
    }
    return {{{"components", comps}}, 0};
}

Outcome cmd_check_dim(const Problem& P, const Flags&, Rng&) {
    DimensionReport R = check_dimensionality(P.tuple, P.M);
    const bool ok = R.i_holds && R.ii_holds && R.iii_holds && R.iv_holds && R.implications_hold();
    return {to_json(R), ok ? 0 : 2};
}

Outcome cmd_reorganize(const Problem& P, const Flags& fl, Rng& rng) {
    json r = to_json(reorganize(P.tuple, P.M, rng, fl.max_retries));
    r["seed"] = rng.seed();
    return {r, 0};
}

Outcome cmd_ratio(const Problem& P, const Flags& fl, Rng& rng) {
    return {to_json(gap_ratios(P.tuple, need_g(P), P.M, base_point(P, fl), rng)), 0};
}

Outcome cmd_liv(const Problem& P, const Flags& fl, Rng& rng) {
    LivReport R = liv_check(P.tuple, need_g(P), P.M, base_point(P, fl), fl.a.value_or(P.a), fl.j.value_or(P.j), rng);
    return {to_json(R), R.holds() ? 0 : 2};
}

Outcome cmd_liv_estimate(const Problem& P, const Flags& fl, Rng& rng) {
    ReverseEstimate R = liv_reverse_estimate(P.tuple, need_g(P), P.M, base_point(P, fl), fl.a.value_or(P.a), P.j_from,
                                             fl.j.value_or(P.j_to), rng);
    return {to_json(R), R.certified_from ? 0 : 2};
}

Outcome cmd_cylinder(const Problem& P, const Flags& fl, Rng& rng) {
    CylinderReport R = cylinder_check(P.tuple, P.M, base_point(P, fl), fl.a.value_or(P.a), fl.j.value_or(P.j), rng);
    return {to_json(R), R.holds() ? 0 : 2};
}

Outcome cmd_blowup(const Problem& P, const Flags&, Rng& rng) {
    json comps = json::array();
    for (const auto& t : P.M.terms())
        comps.push_back({{"prime", to_json(t.comp.prime)},
                         {"mult", t.mult},
                         {"charts", to_json(blowup_charts(P.tuple, t.comp, rng))},
                         {"charts_compatible", charts_compatible(P.tuple, t.comp, rng)}});
    return {{{"components", comps}}, 0};
}

Outcome cmd_segre_vogel(const Problem& P, const Flags&, Rng& rng) {
    SegreVogelReport R = segre_vogel_check(P.tuple, P.M, rng);
    return {to_json(R), R.holds() ? 0 : 2};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gap cycles, Vogel cycles and Le-Iomdine-Vogel checks"};
    app.require_subcommand(1);
    Flags fl;
    using Handler = std::function<Outcome(const Problem&, const Flags&, Rng&)>;
    const std::vector<std::pair<std::string, Handler>> commands{
        {"vogel", cmd_vogel},       {"gap", cmd_gap},
        {"check-dim", cmd_check_dim}, {"reorganize", cmd_reorganize},
        {"ratio", cmd_ratio},       {"liv", cmd_liv},
        {"liv-estimate", cmd_liv_estimate}, {"cylinder", cmd_cylinder},
        {"blowup", cmd_blowup},     {"segre-vogel", cmd_segre_vogel}};
    const std::map<std::string, std::string> about{
        {"vogel", "gap and Vogel cycles of the tuple on M"},
        {"gap", "the three gap schemes at every level"},
        {"check-dim", "correct-dimension flags i-iv"},
        {"reorganize", "generic linear reorganization with a certificate"},
        {"ratio", "gap ratios of Pi^1 against g at the point"},
        {"liv", "local intersection formula for f_0 + a g^j"},
        {"liv-estimate", "recover Delta^0 at the point from a range of j"},
        {"cylinder", "cylinder identities for f_0 + a t^j"},
        {"blowup", "blow-up charts along the tuple"},
        {"segre-vogel", "pushed-forward blow-up cycles against the tower"}};
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, h] : commands) {
        CLI::App* sub = app.add_subcommand(name, about.at(name));
        sub->add_option("--input", fl.input, "problem file (JSON)")->required();
        sub->add_option("--seed", fl.seed, "random seed (default 0, or the file's seed)");
        auto* s = sub->add_flag("--strict", fl.strict, "abort on a correct-dimension violation (default)");
        auto* ar = sub->add_flag("--auto-reorganize", fl.auto_reorganize, "reorganize the tuple on violation");
        s->excludes(ar);
        sub->add_option("--max-retries", fl.max_retries, "reorganization budget")->check(CLI::PositiveNumber);
        sub->add_option("--output", fl.output, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
        sub->add_option("--point", fl.point, "base point, comma-separated rationals");
        sub->add_option("--j", fl.j, "exponent j")->check(CLI::PositiveNumber);
        sub->add_option("--a", fl.a, "coefficient a");
        subs[name] = sub;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    std::string command;
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) command = name;
    try {
        std::ifstream in(fl.input);
        if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + fl.input);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
        }
        Problem P = parse_problem(doc);
        const std::uint64_t seed = fl.seed.value_or(P.seed);
        Rng rng(seed);
        Handler h;
        for (const auto& [name, fn] : commands)
            if (name == command) h = fn;
        Outcome out = h(P, fl, rng);
        json report = {{"command", command},
                       {"ring", P.ring->names()},
                       {"tuple", to_json(P.tuple)},
                       {"M", to_json(P.M)},
                       {"seed", seed},
                       {"result", out.result}};
        emit(report, fl);
        return out.code;
    } catch (const Error& e) {
        emit(error_json(e), fl);
        return 1;
    } catch (const json::exception& e) {
        emit(error_json(Error(ErrorCode::InvalidInput, e.what())), fl);
        return 1;
    }
}

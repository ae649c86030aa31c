#include "gapvogel/blowup.hpp"

#include <algorithm>
#include <bit>

#include "gapvogel/errors.hpp"
#include "gapvogel/ideal_ops.hpp"

namespace gapvogel {

namespace {

Polynomial w_var(const RingPtr& R2, std::size_t base_vars, std::size_t i) {
    return Polynomial::variable(R2, base_vars + i);
}

Tuple lift(const Tuple& f, const RingPtr& R2) {
    Tuple out;
    for (const auto& p : f) out.push_back(p.in_ring(R2));
    return out;
}

bool meets(const Ideal& prime, const Ideal& F) { return !(prime + F).is_unit(); }

Cycle near(const Cycle& C, const Ideal& F) {
    Cycle out(C.ring());
    for (const auto& t : C.terms())
        if (meets(t.comp.prime, F)) out.add(t.comp, t.mult);
    return out;
}

// C . V(w_{m+1}) ... V(w_k) near V(f); nullopt when some step is improper.
std::optional<Cycle> flag_section(const Cycle& C, std::size_t base_vars, int m, int k, const Ideal& F2, Rng& rng) {
    Cycle cur = near(C, F2);
    for (int l = m + 1; l <= k; ++l) {
        try {
            cur = near(intersect_hypersurface(cur, w_var(C.ring(), base_vars, static_cast<std::size_t>(l)), rng), F2);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ImproperIntersection) throw;
            return std::nullopt;
        }
    }
    return cur;
}

Ideal with_linear_slice(const Ideal& I, VarMask vars, const std::vector<long>& values) {
    std::vector<Polynomial> gens = I.generators();
    const RingPtr& R = I.ring();
    for (std::size_t v = 0, n = 0; v < R->nvars(); ++v)
        if ((vars >> v) & 1u) gens.push_back(Polynomial::variable(R, v) - Polynomial(R, Scalar(values[n++])));
    return Ideal(R, gens);
}

// Degree of Z over its image Q, by lengths of fibers over random points of an independent set of Q.
long fiber_degree(const Ideal& Z, const Ideal& Q, Rng& rng) {
    const VarMask U = independent_set(Q);
    const auto nu = static_cast<std::size_t>(std::popcount(U));
    auto probe = [&]() -> long {
        for (int attempt = 0; attempt < 4; ++attempt) {
            std::vector<long> a(nu);
            for (auto& x : a) x = rng.uniform(-kSliceBound, kSliceBound);
            const auto qz = quotient_dimension(with_linear_slice(Z, U, a));
            const auto qq = quotient_dimension(with_linear_slice(Q, U, a));
            if (!qz || !qq || *qq == 0 || *qz % *qq != 0) continue;
            return static_cast<long>(*qz / *qq);
        }
        throw Error(ErrorCode::SliceFailure, "fiber probes kept hitting degenerate points", Z.canonical_strings());
    };
    for (int round = 0; round < 2; ++round) {
        const long a = probe(), b = probe();
        if (a == b) return a;
    }
    throw Error(ErrorCode::FiberDegreeDisagreement, "fiber degree probes disagree", Z.canonical_strings());
}

std::size_t tuple_k(const Tuple& f) {
    if (f.empty()) throw Error(ErrorCode::InvalidInput, "tuple must have at least one entry");
    return f.size() - 1;
}

}  // namespace

RingPtr blowup_ring(const RingPtr& base, std::size_t tuple_len) {
    std::vector<std::string> hints;
    for (std::size_t i = 0; i < tuple_len; ++i) hints.push_back("w" + std::to_string(i));
    return base->extended(hints);
}

std::vector<BlowupChart> blowup_charts(const Tuple& f, const PrimeComponent& V, Rng& rng) {
    const std::size_t k = tuple_k(f);
    const RingPtr& R = V.prime.ring();
    require_same_ring(R, f.front().ring());
    if (std::all_of(f.begin(), f.end(), [&](const Polynomial& p) { return V.prime.contains(p); }))
        throw Error(ErrorCode::PreconditionFailed, "the tuple vanishes identically on the component",
                    V.prime.canonical_strings());
    const RingPtr R2 = blowup_ring(R, f.size());
    const std::size_t n = R->nvars();
    const Tuple fl = lift(f, R2);
    const Ideal P2 = V.prime.in_ring(R2);
    std::vector<BlowupChart> charts;
    for (std::size_t j = 0; j <= k; ++j) {
        BlowupChart c{static_cast<int>(j), R2, Ideal::unit(R2), Cycle(R2), Cycle(R2)};
        if (!V.prime.contains(f[j])) {
            std::vector<Polynomial> gens{w_var(R2, n, j) - Polynomial(R2, 1)};
            for (std::size_t i = 0; i <= k; ++i)
                if (i != j) gens.push_back(fl[i] - w_var(R2, n, i) * fl[j]);
            c.total_ideal = saturate(P2.with(gens), fl[j]);
            c.total = cycle_of_scheme(c.total_ideal, rng);
            c.exceptional = intersect_hypersurface(c.total, fl[j], rng);
        }
        charts.push_back(std::move(c));
    }
    return charts;
}

bool charts_compatible(const Tuple& f, const PrimeComponent& V, Rng& rng) {
    const auto charts = blowup_charts(f, V, rng);
    const std::size_t n = V.prime.ring()->nvars();
    for (const auto& cj : charts)
        for (const auto& cl : charts) {
            if (cj.j >= cl.j || cj.total_ideal.is_unit() || cl.total_ideal.is_unit()) continue;
            const RingPtr& R2 = cj.ring;
            const Polynomial wl = w_var(R2, n, static_cast<std::size_t>(cl.j));
            // rewrite chart-l generators in chart-j coordinates: w_i -> w_i / w_l, then clear w_l
            std::vector<Polynomial> mapped{w_var(R2, n, static_cast<std::size_t>(cj.j)) - Polynomial(R2, 1)};
            for (const auto& g : cl.total_ideal.generators()) {
                unsigned D = 0;
                for (const auto& t : g.terms()) {
                    unsigned dw = 0;
                    for (std::size_t v = n; v < R2->nvars(); ++v) dw += t.m[v];
                    D = std::max(D, dw);
                }
                std::vector<Term> ts;
                for (const auto& t : g.terms()) {
                    unsigned dw = 0;
                    for (std::size_t v = n; v < R2->nvars(); ++v) dw += t.m[v];
                    Monomial m = t.m;
                    const std::size_t lv = n + static_cast<std::size_t>(cl.j);
                    m.set(lv, m[lv] + (D - dw));
                    ts.push_back({m, t.c});
                }
                mapped.push_back(Polynomial::from_terms(R2, std::move(ts)));
            }
            if (saturate(Ideal(R2, mapped), wl) != saturate(cj.total_ideal, wl)) return false;
        }
    return true;
}

std::vector<FlagCheck> proper_flag_check(const Tuple& f, const PrimeComponent& V, Rng& rng) {
    const int k = static_cast<int>(tuple_k(f));
    const auto charts = blowup_charts(f, V, rng);
    const std::size_t n = V.prime.ring()->nvars();
    const Ideal F2 = Ideal(charts.front().ring, lift(f, charts.front().ring)).with(V.prime.in_ring(charts.front().ring).generators());
    std::vector<FlagCheck> out;
    for (int m = 0; m <= k; ++m) {
        FlagCheck fc{m};
        for (const auto& c : charts) {
            if (c.j > m || c.total_ideal.is_unit()) continue;
            if (!flag_section(c.exceptional, n, m, k, F2, rng)) fc.e_proper = false;
            if (!flag_section(c.total, n, m, k, F2, rng)) fc.bl_proper = false;
        }
        out.push_back(fc);
    }
    return out;
}

Cycle push_forward(const Cycle& C, const BlowupChart& chart, const RingPtr& base, Rng& rng) {
    const std::size_t n = base->nvars();
    Cycle out(base);
    for (const auto& t : C.terms()) {
        bool earlier = false;
        for (int jp = 0; jp < chart.j && !earlier; ++jp)
            earlier = !t.comp.prime.contains(w_var(chart.ring, n, static_cast<std::size_t>(jp)));
        if (earlier) continue;
        const Ideal image = eliminate(t.comp.prime, all_vars(n));
        std::vector<Polynomial> gens;
        for (const auto& g : image.basis()) gens.push_back(g.in_ring(base));
        const Ideal Q(base, gens);
        const auto dq = dimension(Q);
        if (!dq || *dq < t.comp.dim) continue;
        out.add(PrimeComponent(Q, *dq), t.mult * fiber_degree(t.comp.prime, Q, rng));
    }
    return out;
}

bool SegreVogelReport::holds() const {
    return hypothesis && std::all_of(levels.begin(), levels.end(),
                                     [](const SegreLevel& L) { return L.pi_hat_equal && L.delta_equal; });
}

SegreVogelReport segre_vogel_check(const Tuple& f, const Cycle& M, Rng& rng) {
    require_valid_m(M);
    const int k = static_cast<int>(tuple_k(f));
    const int d = M.terms().front().comp.dim;
    for (const auto& t : M.terms())
        if (t.comp.dim != d)
            throw Error(ErrorCode::PreconditionFailed, "components of M must share one dimension",
                        t.comp.prime.canonical_strings());
    const RingPtr& R = M.ring();
    const std::size_t n = R->nvars();
    TowerOptions opt;
    opt.mode = TowerMode::Report;
    opt.normalize = false;
    const VogelTower tower = vogel_tower(f, M, rng, opt);

    SegreVogelReport rep;
    const int lo = std::max(0, d - k - 1);
    for (int i = d - 1; i >= lo; --i)
        rep.levels.push_back(SegreLevel{i, i + k + 1 - d, true, true, Cycle(R), Cycle(R), Cycle(R), Cycle(R)});

    for (std::size_t l = 0; l < M.terms().size(); ++l) {
        const auto& term = M.terms()[l];
        const Ideal F = Ideal(R, f).with(term.comp.prime.generators());
        const auto& ct = tower.components[l];
        const bool vanishes =
            std::all_of(f.begin(), f.end(), [&](const Polynomial& p) { return term.comp.prime.contains(p); });
        std::vector<BlowupChart> charts;
        if (!vanishes) charts = blowup_charts(f, term.comp, rng);
        for (auto& L : rep.levels) {
            if (const auto* up = ct.level(L.i + 1)) L.pi_hat += near(up->pi_hat, F) * term.mult;
            if (const auto* here = ct.level(L.i)) L.delta += near(here->delta, F) * term.mult;
            if (vanishes) continue;  // the blow-up is empty
            const Ideal F2 = F.in_ring(charts.front().ring);
            for (const auto& c : charts) {
                if (c.j > L.m || c.total_ideal.is_unit()) continue;
                auto bl = flag_section(c.total, n, L.m, k, F2, rng);
                auto e = flag_section(c.exceptional, n, L.m, k, F2, rng);
                if (!bl) L.bl_proper = false;
                if (!e) L.e_proper = false;
                if (bl) L.pushed_bl += near(push_forward(*bl, c, R, rng), F) * term.mult;
                if (e) L.pushed_e += near(push_forward(*e, c, R, rng), F) * term.mult;
            }
        }
    }
    for (auto& L : rep.levels) {
        rep.hypothesis = rep.hypothesis && L.e_proper;
        L.pi_hat_equal = L.bl_proper && L.e_proper && L.pushed_bl == L.pi_hat;
        L.delta_equal = L.e_proper && L.pushed_e == L.delta;
    }
    return rep;
}

ReorganizeResult vogel_reorganization(const Tuple& f, const Cycle& M, Rng& rng, int max_retries) {
    require_valid_m(M);
    const std::size_t k = tuple_k(f);
    const RingPtr& R = f.front().ring();
    const Ideal F0(R, f);
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        Tuple fhat(k + 1, Polynomial(R));
        std::vector<std::vector<long>> coeffs(k + 1, std::vector<long>(k + 1));
        for (std::size_t r = 0; r <= k; ++r)
            for (std::size_t c = 0; c <= k; ++c) {
                coeffs[r][c] = rng.uniform(-kSliceBound, kSliceBound);
                fhat[r] += f[c] * Scalar(coeffs[r][c]);
            }
        if (Ideal(R, fhat) != F0) continue;
        bool ok = true;
        for (const auto& t : M.terms()) {
            if (F0.with(t.comp.prime.generators()) == t.comp.prime) continue;  // f vanishes on the component
            for (const auto& fc : proper_flag_check(fhat, t.comp, rng)) ok = ok && fc.e_proper;
            if (!ok) break;
        }
        if (ok) return {fhat, coeffs, attempt};
    }
    throw Error(ErrorCode::ReorganizationBudgetExhausted,
                "no Vogel reorganization within " + std::to_string(max_retries) + " attempts", F0.canonical_strings());
}

}  // namespace gapvogel

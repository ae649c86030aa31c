#include "gapvogel/vogel.hpp"

#include <algorithm>
#include <set>

#include "gapvogel/errors.hpp"
#include "gapvogel/ideal_ops.hpp"

namespace gapvogel {

namespace {

bool meets(const Ideal& prime, const Ideal& F) { return !(prime + F).is_unit(); }

std::vector<PrimeComponent> primes_near(const Ideal& I, const Ideal& F) {
    std::vector<PrimeComponent> out;
    if (I.is_unit()) return out;
    for (auto& c : minimal_primes(I))
        if (meets(c.prime, F)) out.push_back(std::move(c));
    return out;
}

std::set<std::string> keys(const std::vector<PrimeComponent>& cs) {
    std::set<std::string> out;
    for (const auto& c : cs) out.insert(c.key);
    return out;
}

Cycle near(const Cycle& C, const Ideal& F) {
    Cycle out(C.ring());
    for (const auto& t : C.terms())
        if (meets(t.comp.prime, F)) out.add(t.comp, t.mult);
    return out;
}

Cycle scheme_cycle_near(const Ideal& I, const Ideal& F, Rng& rng) {
    Cycle out(I.ring());
    for (const auto& c : primes_near(I, F)) out.add(c, local_length(I, c, rng));
    return out;
}

std::string level_name(const char* base, int i) { return std::string(base) + "^" + std::to_string(i); }

void require_tuple(const Tuple& f) {
    if (f.empty()) throw Error(ErrorCode::InvalidInput, "tuple must have at least one entry");
    for (const auto& p : f) require_same_ring(f.front().ring(), p.ring());
}

Ideal tuple_ideal(const Tuple& f) { return Ideal(f.front().ring(), f); }

int bottom_index(int d, int k) { return std::max(0, d - (k + 1)); }

// Throws the first failure of a component tower, scanning from the top level.
void raise_first_failure(const ComponentTower& t) {
    for (const auto& L : t.levels) {
        const auto& fl = L.flags;
        if (!fl.pi_eq_tilde)
            throw CorrectDimensionViolated(L.i, level_name("Pi", L.i),
                                           "|Pi^" + std::to_string(L.i) + "| differs from |Pi~^" +
                                               std::to_string(L.i) + "| near V(f)",
                                           L.pi_scheme.canonical_strings());
        if (!fl.pi_eq_hat)
            throw CorrectDimensionViolated(L.i, level_name("Pi", L.i),
                                           "|Pi^" + std::to_string(L.i) + "| differs from |Pi^^" +
                                               std::to_string(L.i) + "| near V(f)",
                                           L.pi_scheme.canonical_strings());
        if (!fl.pure_pi)
            throw CorrectDimensionViolated(L.i, level_name("Pi", L.i),
                                           "Pi^" + std::to_string(L.i) + " is not purely " +
                                               std::to_string(L.i) + "-dimensional near V(f)",
                                           L.pi_scheme.canonical_strings());
        if (t.improper && t.levels.back().i == L.i)
            throw CorrectDimensionViolated(L.i, level_name("Pi_hat", L.i + 1), *t.improper,
                                           L.pi_hat_scheme.canonical_strings());
        if (!fl.hat_cycle_agrees)
            throw CorrectDimensionViolated(L.i, level_name("Pi_hat", L.i),
                                           "computed Pi^^" + std::to_string(L.i) +
                                               " disagrees with the cycle of its scheme near V(f)",
                                           L.pi_hat_scheme.canonical_strings());
        if (!fl.pure_delta)
            throw CorrectDimensionViolated(L.i, level_name("Delta", L.i),
                                           "Delta^" + std::to_string(L.i) + " is not purely " +
                                               std::to_string(L.i) + "-dimensional");
    }
}

}  // namespace

Tuple normalize_tuple(const Tuple& f, int d) {
    require_tuple(f);
    if (d < 1) throw Error(ErrorCode::InvalidInput, "normalization needs a positive dimension");
    const int n = static_cast<int>(f.size());
    if (n > d) return Tuple(f.end() - d, f.end());
    Tuple out(static_cast<std::size_t>(d - n), f.front());
    out.insert(out.end(), f.begin(), f.end());
    return out;
}

Ideal gap_scheme(const Tuple& f, const Ideal& P, int d, int i, GapFlavor flavor) {
    require_tuple(f);
    const int k = static_cast<int>(f.size()) - 1;
    const RingPtr& R = P.ring();
    if (i > d || i <= d - (k + 1)) return Ideal::unit(R);
    if (i == d) {
        if (flavor == GapFlavor::Plain) return saturate(P, tuple_ideal(f));
        return saturate(P, f[static_cast<std::size_t>(k)]);
    }
    const auto lo = static_cast<std::size_t>(i + k + 1 - d);
    const Polynomial& below = f[lo - 1];
    if (flavor == GapFlavor::Inductive)
        return saturate(gap_scheme(f, P, d, i + 1, GapFlavor::Inductive).with(f[lo]), below);
    Ideal J = P.with(Tuple(f.begin() + static_cast<long>(lo), f.end()));
    if (flavor == GapFlavor::Plain) return saturate(J, tuple_ideal(f));
    return saturate(J, below);
}

const VogelLevel* ComponentTower::level(int i) const {
    for (const auto& L : levels)
        if (L.i == i) return &L;
    return nullptr;
}

bool ComponentTower::correct_dimension() const {
    if (improper) return false;
    return std::all_of(levels.begin(), levels.end(), [](const VogelLevel& L) { return L.flags.all(); });
}

int VogelTower::top() const {
    int t = -1;
    for (const auto& c : components) t = std::max(t, c.d);
    return t;
}

int VogelTower::bottom() const {
    int b = top();
    for (const auto& c : components)
        if (!c.levels.empty()) b = std::min(b, c.levels.back().i);
    return b;
}

Cycle VogelTower::pi_hat(int i) const {
    Cycle out(ring);
    for (const auto& c : components)
        if (const auto* L = c.level(i)) out += L->pi_hat * c.mult;
    return out;
}

Cycle VogelTower::delta(int i) const {
    Cycle out(ring);
    for (const auto& c : components)
        if (const auto* L = c.level(i)) out += L->delta * c.mult;
    return out;
}

bool VogelTower::correct_dimension() const {
    return std::all_of(components.begin(), components.end(),
                       [](const ComponentTower& c) { return c.correct_dimension(); });
}

Cycle whole_space(const RingPtr& ring) {
    return Cycle::of(PrimeComponent(Ideal(ring), static_cast<int>(ring->nvars())));
}

void require_valid_m(const Cycle& M) {
    if (M.is_zero()) throw Error(ErrorCode::InvalidInput, "M must be a non-zero cycle");
    const bool pos = M.terms().front().mult > 0;
    for (const auto& t : M.terms())
        if ((t.mult > 0) != pos)
            throw Error(ErrorCode::InvalidInput, "M must have multiplicities of a single sign",
                        t.comp.prime.canonical_strings());
}

ComponentTower component_tower(const Tuple& f, const PrimeComponent& V, long mult, Rng& rng, bool normalize) {
    require_tuple(f);
    require_same_ring(f.front().ring(), V.prime.ring());
    const int d = V.dim;
    const Ideal& P = V.prime;
    const RingPtr& R = P.ring();
    const Ideal F = tuple_ideal(f).with(P.generators());

    ComponentTower t{mult, V, d, (normalize && d > 0) ? normalize_tuple(f, d) : f, {}, std::nullopt};
    const Tuple& g = t.tuple;
    const int k = t.k();
    const int bottom = bottom_index(d, k);

    const bool vanishes = std::all_of(g.begin(), g.end(), [&](const Polynomial& p) { return P.contains(p); });
    Cycle top_hat(R), top_delta(R);
    if (vanishes)
        top_delta = Cycle::of(V);
    else if (!P.contains(g.back()))
        top_hat = Cycle::of(V);

    Cycle hat = top_hat;
    for (int i = d; i >= bottom; --i) {
        VogelLevel L{i,
                     Cycle(R),
                     Cycle(R),
                     gap_scheme(g, P, d, i, GapFlavor::Plain),
                     gap_scheme(g, P, d, i, GapFlavor::Modified),
                     gap_scheme(g, P, d, i, GapFlavor::Inductive),
                     {}};
        const auto pi = primes_near(L.pi_scheme, F);
        const auto pi_set = keys(pi);
        L.flags.pure_pi = std::all_of(pi.begin(), pi.end(), [&](const PrimeComponent& c) { return c.dim == i; });
        L.flags.pi_eq_tilde = pi_set == keys(primes_near(L.pi_tilde_scheme, F));
        L.flags.pi_eq_hat = pi_set == keys(primes_near(L.pi_hat_scheme, F));

        if (i == d) {
            L.pi_hat = top_hat;
            L.delta = top_delta;
        } else if (!t.improper) {
            const auto& h = g[static_cast<std::size_t>(i + k + 1 - d)];
            try {
                Cycle T = intersect_hypersurface(hat, h, rng);
                auto [inside, outside] = split_by_variety(T, F);
                L.delta = inside;
                L.pi_hat = outside;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ImproperIntersection) throw;
                t.improper = std::string("Pi^^") + std::to_string(i + 1) + " meets V(" + h.to_string() +
                             ") improperly: " + e.what();
            }
        }
        if (!t.improper) {
            hat = L.pi_hat;
            L.flags.hat_cycle_agrees = near(L.pi_hat, F) == scheme_cycle_near(L.pi_hat_scheme, F, rng);
            L.flags.pure_delta = purity_check(L.delta, i);
        } else {
            L.flags.hat_cycle_agrees = false;
            L.flags.pure_delta = false;
        }
        t.levels.push_back(std::move(L));
        if (t.improper) break;
    }
    return t;
}

namespace {

ReorganizeResult reorganize_impl(const Tuple& f, const Cycle& M, Rng& rng, int max_retries,
                                 std::vector<ComponentTower>* towers);

std::vector<ComponentTower> all_towers(const Tuple& f, const Cycle& M, Rng& rng, bool normalize) {
    std::vector<ComponentTower> out;
    for (const auto& term : M.terms()) out.push_back(component_tower(f, term.comp, term.mult, rng, normalize));
    return out;
}

}  // namespace

VogelTower vogel_tower(const Tuple& f, const Cycle& M, Rng& rng, const TowerOptions& opt) {
    require_tuple(f);
    require_valid_m(M);
    require_same_ring(f.front().ring(), M.ring());
    VogelTower tower{M.ring(), all_towers(f, M, rng, opt.normalize), std::nullopt, rng.seed()};
    if (tower.correct_dimension() || opt.mode == TowerMode::Report) return tower;
    if (opt.mode == TowerMode::Strict) {
        for (const auto& c : tower.components) raise_first_failure(c);
    }
    std::vector<ComponentTower> towers;
    tower.reorganization = reorganize_impl(f, M, rng, opt.max_retries, &towers);
    tower.components = std::move(towers);
    return tower;
}

std::vector<VogelSet> vogel_sets(const Tuple& f, const Cycle& M) {
    require_tuple(f);
    const RingPtr& R = M.ring();
    const Ideal F0 = tuple_ideal(f);
    int top = -1, bottom = 1 << 20;
    for (const auto& t : M.terms()) {
        top = std::max(top, t.comp.dim);
        bottom = std::min(bottom, bottom_index(t.comp.dim, t.comp.dim - 1));
    }
    std::vector<VogelSet> out;
    for (int i = top; i >= bottom; --i) {
        VogelSet S{i, {}, Ideal::unit(R)};
        std::set<std::string> seen;
        for (const auto& term : M.terms()) {
            const auto& V = term.comp;
            const int d = V.dim;
            if (i > d) continue;
            const Tuple g = d > 0 ? normalize_tuple(f, d) : f;
            const int k = static_cast<int>(g.size()) - 1;
            const Ideal F = F0.with(V.prime.generators());
            std::vector<PrimeComponent> found;
            if (i == d) {
                if (std::all_of(g.begin(), g.end(), [&](const Polynomial& p) { return V.prime.contains(p); }))
                    found.push_back(V);
            } else if (i >= bottom_index(d, k)) {
                const Ideal above = gap_scheme(g, V.prime, d, i + 1, GapFlavor::Plain);
                const Ideal J = above.with(g[static_cast<std::size_t>(i + k + 1 - d)]);
                if (!J.is_unit())
                    for (auto& c : minimal_primes(J))
                        if (c.prime.contains(F)) found.push_back(std::move(c));
            }
            for (auto& c : found)
                if (seen.insert(c.key).second) S.components.push_back(std::move(c));
        }
        std::vector<Ideal> ps;
        for (const auto& c : S.components) ps.push_back(c.prime);
        if (!ps.empty()) S.support = intersect(ps, R);
        out.push_back(std::move(S));
    }
    return out;
}

bool DimensionReport::implications_hold() const {
    return i_holds == ii_holds && ii_holds == iii_holds && (!i_holds || iv_holds);
}

DimensionReport check_dimensionality(const Tuple& f, const Cycle& M) {
    require_tuple(f);
    DimensionReport rep;
    const Ideal F0 = tuple_ideal(f);
    for (const auto& term : M.terms()) {
        const auto& V = term.comp;
        const int d = V.dim;
        const Tuple g = d > 0 ? normalize_tuple(f, d) : f;
        const int k = static_cast<int>(g.size()) - 1;
        const Ideal F = F0.with(V.prime.generators());
        DimensionReport::Component C{V, {}};
        for (int i = d; i >= bottom_index(d, k); --i) {
            DimensionReport::Level L{i, true, true, true, true};
            const auto pi = primes_near(gap_scheme(g, V.prime, d, i, GapFlavor::Plain), F);
            const auto pi_set = keys(pi);
            L.pure_pi = std::all_of(pi.begin(), pi.end(), [&](const PrimeComponent& c) { return c.dim == i; });
            L.pi_eq_tilde = pi_set == keys(primes_near(gap_scheme(g, V.prime, d, i, GapFlavor::Modified), F));
            L.pi_eq_hat = pi_set == keys(primes_near(gap_scheme(g, V.prime, d, i, GapFlavor::Inductive), F));
            C.levels.push_back(L);
        }
        rep.components.push_back(std::move(C));
    }
    for (const auto& S : vogel_sets(f, M))
        for (const auto& c : S.components)
            if (c.dim != S.i) rep.iv_holds = false;
    for (const auto& C : rep.components)
        for (const auto& L : C.levels) {
            rep.i_holds = rep.i_holds && L.pure_pi;
            rep.ii_holds = rep.ii_holds && L.pi_eq_tilde;
            rep.iii_holds = rep.iii_holds && L.pi_eq_hat;
        }
    return rep;
}

namespace {

constexpr int kEntryRedraws = 8;

// Condition needed of the entry at position j: V(fhat_j) contains no component of the
// gap variety built from the entries already chosen above it.
bool entry_acceptable(const Polynomial& cand, const Tuple& chosen_above, std::size_t j, std::size_t k,
                      const Ideal& F0, const Cycle& M) {
    for (const auto& term : M.terms()) {
        const auto& V = term.comp;
        const int d = V.dim;
        const int i = static_cast<int>(j) - static_cast<int>(k) + d;
        if (i < 0) continue;
        const Ideal F = F0.with(V.prime.generators());
        if (V.prime.contains(F)) continue;  // f vanishes identically on V
        Ideal pi = j == k ? V.prime : saturate(V.prime.with(chosen_above), F);
        if (pi.is_unit()) continue;
        for (const auto& c : minimal_primes(pi))
            if (c.prime.contains(cand)) return false;
    }
    return true;
}

bool schemes_agree(const ComponentTower& t) {
    for (const auto& L : t.levels)
        if (L.pi_scheme != L.pi_tilde_scheme || L.pi_scheme != L.pi_hat_scheme) return false;
    return true;
}

ReorganizeResult reorganize_impl(const Tuple& f, const Cycle& M, Rng& rng, int max_retries,
                                 std::vector<ComponentTower>* towers) {
    require_tuple(f);
    require_valid_m(M);
    const RingPtr& R = f.front().ring();
    const std::size_t n = f.size(), k = n - 1;
    const Ideal F0 = tuple_ideal(f);
    std::string last = "no attempt made";
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        Tuple fhat(n, Polynomial(R));
        std::vector<std::vector<long>> coeffs(n);
        bool ok = true;
        for (std::size_t jj = n; jj-- > 0 && ok;) {
            const Tuple above(fhat.begin() + static_cast<long>(jj) + 1, fhat.end());
            bool accepted = false;
            for (int r = 0; r < kEntryRedraws && !accepted; ++r) {
                std::vector<long> a(n);
                Polynomial cand(R);
                for (std::size_t m = 0; m < n; ++m) {
                    a[m] = rng.uniform(-kSliceBound, kSliceBound);
                    cand += f[m] * Scalar(a[m]);
                }
                if (entry_acceptable(cand, above, jj, k, F0, M)) {
                    fhat[jj] = cand;
                    coeffs[jj] = a;
                    accepted = true;
                }
            }
            if (!accepted) {
                ok = false;
                last = "entry " + std::to_string(jj) + " rejected after " + std::to_string(kEntryRedraws) + " draws";
            }
        }
        if (!ok) continue;
        if (tuple_ideal(fhat) != F0) {
            last = "reorganized tuple generates a different ideal";
            continue;
        }
        auto ts = all_towers(fhat, M, rng, true);
        auto bad = std::find_if(ts.begin(), ts.end(),
                                [](const ComponentTower& t) { return !t.correct_dimension() || !schemes_agree(t); });
        if (bad != ts.end()) {
            last = "reorganized tuple fails the correct-dimension certificate";
            continue;
        }
        if (towers) *towers = std::move(ts);
        return {fhat, coeffs, attempt};
    }
    throw Error(ErrorCode::ReorganizationBudgetExhausted,
                "no agreeable reorganization within " + std::to_string(max_retries) + " attempts: " + last,
                F0.canonical_strings());
}

}  // namespace

ReorganizeResult reorganize(const Tuple& f, const Cycle& M, Rng& rng, int max_retries) {
    return reorganize_impl(f, M, rng, max_retries, nullptr);
}

}  // namespace gapvogel

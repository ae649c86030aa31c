#include "gapvogel/cycles.hpp"

#include "gapvogel/errors.hpp"
#include "gapvogel/ideal_ops.hpp"

namespace gapvogel {

Cycle cycle_not(const Cycle& C, const Ideal& W) {
    require_same_ring(C.ring(), W.ring());
    Cycle out(C.ring());
    for (const CycleTerm& t : C.terms())
        if (!t.comp.prime.contains(W)) out.add(t.comp, t.mult);
    return out;
}

Cycle intersect_hypersurface(const Cycle& C, const Polynomial& f, Rng& rng) {
    require_same_ring(C.ring(), f.ring());
    Cycle out(C.ring());
    for (const CycleTerm& t : C.terms()) {
        if (t.comp.prime.contains(f))
            throw Error(ErrorCode::ImproperIntersection, "hypersurface " + f.to_string() + " contains a component",
                        t.comp.prime.canonical_strings());
        out += cycle_of_scheme(t.comp.prime.with(f), rng) * t.mult;
    }
    return out;
}

std::pair<Cycle, Cycle> split_by_variety(const Cycle& C, const Ideal& Z) {
    require_same_ring(C.ring(), Z.ring());
    Cycle inside(C.ring()), outside(C.ring());
    for (const CycleTerm& t : C.terms()) {
        if (t.comp.prime.contains(Z))
            inside.add(t.comp, t.mult);
        else
            outside.add(t.comp, t.mult);
    }
    return {inside, outside};
}

bool purity_check(const Cycle& C, int i) {
    for (const CycleTerm& t : C.terms())
        if (t.comp.dim != i) return false;
    return true;
}

Ideal support(const Cycle& C) {
    if (C.is_zero()) return Ideal::unit(C.ring());
    std::vector<Ideal> primes;
    for (const CycleTerm& t : C.terms()) primes.push_back(t.comp.prime);
    return intersect(primes, C.ring());
}

Cycle through_point(const Cycle& C, const std::vector<Scalar>& q) {
    Cycle out(C.ring());
    for (const CycleTerm& t : C.terms()) {
        bool vanishes = true;
        for (const Polynomial& g : t.comp.prime.basis())
            if (g.evaluate(q) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) out.add(t.comp, t.mult);
    }
    return out;
}

}  // namespace gapvogel

#include "gapvogel/ideal_ops.hpp"

namespace gapvogel {

namespace {

// Ring with one fresh variable appended; returns (extended ring, index of new variable).
std::pair<RingPtr, std::size_t> with_tag(const RingPtr& ring) {
    return {ring->extended({"_t"}), ring->nvars()};
}

Ideal contract(const Ideal& J, const RingPtr& base) {
    Ideal e = eliminate(J, all_vars(base->nvars()));
    return e.in_ring(base);
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) { return I + J; }

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Polynomial> g;
    for (const Polynomial& a : I.generators())
        for (const Polynomial& b : J.generators()) {
            Polynomial c = a * b;
            if (!c.is_zero()) g.push_back(c);
        }
    return Ideal(I.ring(), std::move(g));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;
    if (I.is_zero() || J.is_zero()) return Ideal(I.ring());
    auto [ext, t] = with_tag(I.ring());
    Polynomial tv = Polynomial::variable(ext, t);
    Polynomial one_minus = Polynomial(ext, 1) - tv;
    std::vector<Polynomial> g;
    for (const Polynomial& a : I.basis()) g.push_back(tv * a.in_ring(ext));
    for (const Polynomial& b : J.basis()) g.push_back(one_minus * b.in_ring(ext));
    return contract(Ideal(ext, std::move(g)), I.ring());
}

Ideal intersect(const std::vector<Ideal>& ideals, const RingPtr& ring) {
    Ideal acc = Ideal::unit(ring);
    for (const Ideal& I : ideals) acc = intersect(acc, I);
    return acc;
}

Ideal quotient(const Ideal& I, const Polynomial& g) {
    require_same_ring(I.ring(), g.ring());
    if (g.is_zero()) return Ideal::unit(I.ring());
    if (g.is_constant() || I.is_unit()) return I;
    Ideal inter = intersect(I, Ideal(I.ring(), {g}));
    std::vector<Polynomial> out;
    for (const Polynomial& h : inter.basis()) {
        Polynomial q(I.ring());
        divide_exact(h, g, &q);
        out.push_back(q);
    }
    return Ideal(I.ring(), std::move(out));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
    Ideal acc = Ideal::unit(I.ring());
    for (const Polynomial& g : J.generators()) acc = intersect(acc, quotient(I, g));
    return acc;
}

Ideal saturate(const Ideal& I, const Polynomial& g) {
    require_same_ring(I.ring(), g.ring());
    if (g.is_zero()) return Ideal::unit(I.ring());
    if (g.is_constant() || I.is_unit()) return I;
    if (I.contains(g)) return Ideal::unit(I.ring());
    auto [ext, t] = with_tag(I.ring());
    std::vector<Polynomial> gens;
    for (const Polynomial& a : I.basis()) gens.push_back(a.in_ring(ext));
    gens.push_back(Polynomial(ext, 1) - Polynomial::variable(ext, t) * g.in_ring(ext));
    return contract(Ideal(ext, std::move(gens)), I.ring());
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Polynomial> gens;
    for (const Polynomial& g : J.basis())
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) return Ideal::unit(I.ring());
    if (gens.size() == 1) return saturate(I, gens[0]);
    Ideal acc = Ideal::unit(I.ring());
    for (const Polynomial& g : gens) {
        acc = intersect(acc, saturate(I, g));
        if (acc == I) break;
    }
    return acc;
}

bool radical_member(const Polynomial& p, const Ideal& I) {
    require_same_ring(p.ring(), I.ring());
    if (I.contains(p)) return true;
    auto [ext, t] = with_tag(I.ring());
    std::vector<Polynomial> gens;
    for (const Polynomial& a : I.basis()) gens.push_back(a.in_ring(ext));
    gens.push_back(Polynomial(ext, 1) - Polynomial::variable(ext, t) * p.in_ring(ext));
    return Ideal(ext, std::move(gens)).is_unit();
}

bool variety_contained(const Ideal& I, const Ideal& J) {
    for (const Polynomial& g : J.generators())
        if (!radical_member(g, I)) return false;
    return true;
}

bool same_variety(const Ideal& I, const Ideal& J) {
    return variety_contained(I, J) && variety_contained(J, I);
}

}  // namespace gapvogel

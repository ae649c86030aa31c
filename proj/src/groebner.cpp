#include "gapvogel/groebner.hpp"

#include <algorithm>
#include <functional>

#include "gapvogel/errors.hpp"

namespace gapvogel {

namespace {

struct ZTerm {
    Monomial m;
    mpz_class c;
};
using ZPoly = std::vector<ZTerm>;

ZPoly to_zpoly(const Polynomial& p, const MonomialOrder& order, Scalar* scale = nullptr) {
    mpz_class den = 1;
    for (const Term& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
    ZPoly z;
    z.reserve(p.size());
    for (const Term& t : p.terms()) {
        mpz_class c = t.c.get_num() * (den / t.c.get_den());
        z.push_back({t.m, std::move(c)});
    }
    if (!(order == MonomialOrder::grevlex()))
        std::sort(z.begin(), z.end(), [&](const ZTerm& a, const ZTerm& b) { return order.greater(a.m, b.m); });
    if (scale) *scale = Scalar(den);
    return z;
}

mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const ZTerm& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divide by content and make the leading coefficient positive. Returns the divisor used.
mpz_class make_primitive(ZPoly& p) {
    if (p.empty()) return 1;
    mpz_class g = content(p);
    if (sgn(p.front().c) < 0) g = -g;
    if (g != 1)
        for (ZTerm& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    return g;
}

// a*m1*P - b*m2*Q, dropping the leading terms of P and Q (assumed to cancel).
ZPoly combine(const mpz_class& a, const Monomial& m1, const ZPoly& P, std::size_t p_start,
              const mpz_class& b, const Monomial& m2, const ZPoly& Q, const MonomialOrder& order) {
    ZPoly r;
    r.reserve(P.size() - p_start + Q.size());
    std::size_t i = p_start + 1, j = 1;
    const bool a_one = a == 1, m1_one = m1.is_one();
    mpz_class tmp;
    while (i < P.size() || j < Q.size()) {
        int c;
        Monomial mp, mq;
        if (i < P.size()) mp = m1_one ? P[i].m : P[i].m * m1;
        if (j < Q.size()) mq = Q[j].m * m2;
        if (i == P.size()) c = -1;
        else if (j == Q.size()) c = 1;
        else c = order.compare(mp, mq);
        if (c > 0) {
            r.push_back({mp, a_one ? P[i].c : mpz_class(a * P[i].c)});
            ++i;
        } else if (c < 0) {
            r.push_back({mq, mpz_class(-b * Q[j].c)});
            ++j;
        } else {
            if (a_one) tmp = P[i].c;
            else tmp = a * P[i].c;
            tmp -= b * Q[j].c;
            if (sgn(tmp) != 0) r.push_back({mp, tmp});
            ++i;
            ++j;
        }
    }
    return r;
}

struct Element {
    ZPoly p;
    Monomial lm;
    unsigned sugar = 0;
    bool active = true;
};

const Element* find_divisor(const std::vector<Element>& G, const Monomial& m) {
    for (const Element& g : G)
        if (g.active && g.lm.divides(m)) return &g;
    return nullptr;
}

// Full reduction of p by the active elements. scale accumulates the rational factor
// applied to p so that the result equals scale * p modulo the ideal.
ZPoly reduce_full(ZPoly work, const std::vector<Element>& G, const MonomialOrder& order, Scalar* scale) {
    ZPoly done;
    std::size_t start = 0;
    mpz_class g, a, b;
    unsigned steps = 0;
    while (start < work.size()) {
        const ZTerm& t = work[start];
        const Element* div = find_divisor(G, t.m);
        if (!div) {
            done.push_back(t);
            ++start;
            continue;
        }
        const mpz_class& lc = div->p.front().c;
        mpz_gcd(g.get_mpz_t(), t.c.get_mpz_t(), lc.get_mpz_t());
        mpz_divexact(a.get_mpz_t(), lc.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
        if (sgn(a) < 0) {
            a = -a;
            b = -b;
        }
        Monomial q = t.m / div->lm;
        work = combine(a, Monomial(), work, start, b, q, div->p, order);
        start = 0;
        if (a != 1) {
            for (ZTerm& d : done) d.c *= a;
            if (scale) *scale *= a;
        }
        if (++steps % 32 == 0) {
            // keep coefficients small on long reductions
            mpz_class c = 0;
            for (const ZTerm& d : done) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.c.get_mpz_t());
            for (const ZTerm& d : work) {
                if (c == 1) break;
                mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.c.get_mpz_t());
            }
            if (c > 1) {
                for (ZTerm& d : done) mpz_divexact(d.c.get_mpz_t(), d.c.get_mpz_t(), c.get_mpz_t());
                for (ZTerm& d : work) mpz_divexact(d.c.get_mpz_t(), d.c.get_mpz_t(), c.get_mpz_t());
                if (scale) *scale /= c;
            }
        }
    }
    return done;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
};

class Buchberger {
public:
    explicit Buchberger(const MonomialOrder& order) : order_(order) {}

    // Returns false when the ideal is the unit ideal.
    bool add(ZPoly p, unsigned sugar) {
        p = reduce_full(std::move(p), G_, order_, nullptr);
        if (p.empty()) return true;
        make_primitive(p);
        if (p.front().m.is_one()) return false;
        insert(std::move(p), sugar);
        return true;
    }

    bool run() {
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k) {
                const Pair& x = pairs_[k];
                const Pair& y = pairs_[best];
                int c = order_.compare(x.lcm, y.lcm);
                if (c < 0 || (c == 0 && (x.sugar < y.sugar || (x.sugar == y.sugar && (x.j < y.j || (x.j == y.j && x.i < y.i))))))
                    best = k;
            }
            Pair pr = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<long>(best));
            const Element& f = G_[pr.i];
            const Element& g = G_[pr.j];
            mpz_class gc;
            mpz_gcd(gc.get_mpz_t(), f.p.front().c.get_mpz_t(), g.p.front().c.get_mpz_t());
            mpz_class a = g.p.front().c / gc, b = f.p.front().c / gc;
            ZPoly s = combine(a, pr.lcm / f.lm, f.p, 0, b, pr.lcm / g.lm, g.p, order_);
            if (s.empty()) continue;
            if (!add(std::move(s), pr.sugar)) return false;
        }
        return true;
    }

    std::vector<ZPoly> reduced_basis() {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < G_.size(); ++k)
            if (G_[k].active) idx.push_back(k);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return order_.compare(G_[a].lm, G_[b].lm) < 0; });
        std::vector<ZPoly> out;
        for (std::size_t k : idx) {
            G_[k].active = false;
            ZPoly head{G_[k].p.front()};
            ZPoly tail(G_[k].p.begin() + 1, G_[k].p.end());
            Scalar scale = 1;
            ZPoly red = reduce_full(std::move(tail), G_, order_, &scale);
            mpz_class mult = scale.get_num();  // reduction only multiplies by integers here
            mpz_class div = scale.get_den();
            // head * scale + red, as integers: head*num + red*den
            ZPoly full;
            full.push_back({head[0].m, head[0].c * mult});
            for (ZTerm& t : red) full.push_back({t.m, t.c * div});
            make_primitive(full);
            G_[k].active = true;
            out.push_back(std::move(full));
        }
        return out;
    }

private:
    void insert(ZPoly p, unsigned sugar) {
        Element h;
        h.lm = p.front().m;
        h.p = std::move(p);
        h.sugar = sugar;
        const std::size_t hi = G_.size();

        // Gebauer-Moeller update.
        std::vector<std::size_t> C;
        for (std::size_t k = 0; k < G_.size(); ++k)
            if (G_[k].active) C.push_back(k);
        std::vector<Monomial> lcms(G_.size());
        for (std::size_t k : C) lcms[k] = h.lm.lcm(G_[k].lm);
        std::vector<std::size_t> D;
        for (std::size_t n = 0; n < C.size(); ++n) {
            std::size_t g1 = C[n];
            bool keep = h.lm.coprime(G_[g1].lm);
            if (!keep) {
                keep = true;
                for (std::size_t m = n + 1; m < C.size() && keep; ++m)
                    if (lcms[C[m]].divides(lcms[g1])) keep = false;
                for (std::size_t g2 : D)
                    if (keep && lcms[g2].divides(lcms[g1])) keep = false;
            }
            if (keep) D.push_back(g1);
        }
        std::vector<Pair> kept;
        for (const Pair& pr : pairs_) {
            const Monomial& l = pr.lcm;
            if (!h.lm.divides(l) || h.lm.lcm(G_[pr.i].lm) == l || h.lm.lcm(G_[pr.j].lm) == l) kept.push_back(pr);
        }
        for (std::size_t g : D) {
            if (h.lm.coprime(G_[g].lm)) continue;
            const Monomial& l = lcms[g];
            unsigned s = std::max(G_[g].sugar + (l.degree() - G_[g].lm.degree()), sugar + (l.degree() - h.lm.degree()));
            kept.push_back({g, hi, l, s});
        }
        pairs_ = std::move(kept);
        for (Element& g : G_)
            if (g.active && h.lm.divides(g.lm)) g.active = false;
        G_.push_back(std::move(h));
    }

    MonomialOrder order_;
    std::vector<Element> G_;
    std::vector<Pair> pairs_;
};

Polynomial from_zpoly(const RingPtr& ring, const ZPoly& z) {
    std::vector<Term> terms;
    terms.reserve(z.size());
    for (const ZTerm& t : z) terms.push_back({t.m, Scalar(t.c)});
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

VarMask all_vars(std::size_t nvars) {
    return nvars >= kMaxVars ? ~VarMask(0) : (var_bit(nvars) - 1);
}

Basis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    std::vector<const Polynomial*> input;
    for (const Polynomial& g : gens) {
        require_same_ring(ring, g.ring());
        if (g.is_zero()) continue;
        if (g.is_constant()) return {Polynomial(ring, 1)};
        input.push_back(&g);
    }
    // Deterministic insertion: ascending leading monomial, then canonical order.
    std::sort(input.begin(), input.end(), [&](const Polynomial* a, const Polynomial* b) {
        int c = order.compare(a->leading_term(order).m, b->leading_term(order).m);
        if (c) return c < 0;
        return compare(*a, *b) < 0;
    });
    Buchberger bb(order);
    for (const Polynomial* g : input) {
        ZPoly z = to_zpoly(*g, order);
        make_primitive(z);
        if (!bb.add(std::move(z), g->total_degree())) return {Polynomial(ring, 1)};
    }
    if (!bb.run()) return {Polynomial(ring, 1)};
    Basis out;
    for (const ZPoly& z : bb.reduced_basis()) out.push_back(from_zpoly(ring, z));
    return out;
}

Basis groebner_basis(const Ideal& I, const MonomialOrder& order) { return I.basis(order); }

Polynomial reduce(const Polynomial& p, const Basis& gb, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    std::vector<Element> G;
    for (const Polynomial& g : gb) {
        Element e;
        e.p = to_zpoly(g, order);
        e.lm = e.p.front().m;
        G.push_back(std::move(e));
    }
    Scalar den;
    ZPoly z = to_zpoly(p, order, &den);
    Scalar scale = 1;
    ZPoly r = reduce_full(std::move(z), G, order, &scale);
    // r = scale * den * p  (mod I)
    Polynomial out = from_zpoly(p.ring(), r);
    return out * Scalar(1 / (scale * den));
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const Polynomial& g : gens_) require_same_ring(ring_, g.ring());
}

const Basis& Ideal::basis(const MonomialOrder& order) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->bases.find(order);
        if (it != cache_->bases.end()) return *it->second;
    }
    auto computed = std::make_shared<const Basis>(groebner_basis(ring_, gens_, order));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->bases.emplace(order, computed);
    return *it->second;
}

bool Ideal::is_unit() const {
    for (const Polynomial& g : gens_)
        if (!g.is_zero() && g.is_constant()) return true;
    const Basis& b = basis();
    return b.size() == 1 && b[0].is_constant();
}

bool Ideal::is_zero() const {
    for (const Polynomial& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

bool Ideal::contains(const Polynomial& p) const {
    if (p.is_zero()) return true;
    return reduce(p, basis(), MonomialOrder::grevlex()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
    for (const Polynomial& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::operator==(const Ideal& other) const {
    if (!same_ring(ring_, other.ring_)) return false;
    const Basis& a = basis();
    const Basis& b = other.basis();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Ideal Ideal::operator+(const Ideal& other) const {
    require_same_ring(ring_, other.ring_);
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(ring_, std::move(g));
}

Ideal Ideal::with(const Polynomial& p) const {
    std::vector<Polynomial> g = gens_;
    g.push_back(p);
    return Ideal(ring_, std::move(g));
}

Ideal Ideal::with(const std::vector<Polynomial>& ps) const {
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), ps.begin(), ps.end());
    return Ideal(ring_, std::move(g));
}

Ideal Ideal::in_ring(const RingPtr& target) const {
    std::vector<Polynomial> g;
    for (const Polynomial& p : gens_) g.push_back(p.in_ring(target));
    return Ideal(target, std::move(g));
}

std::vector<std::string> Ideal::canonical_strings() const {
    std::vector<std::string> out;
    for (const Polynomial& p : basis()) out.push_back(p.to_string());
    return out;
}

std::string Ideal::key() const {
    std::string k;
    for (const std::string& s : canonical_strings()) {
        k += s;
        k += ';';
    }
    return k;
}

Polynomial normal_form(const Polynomial& p, const Ideal& I, const MonomialOrder& order) {
    return reduce(p, I.basis(order), order);
}

Ideal eliminate(const Ideal& I, VarMask keep) {
    const VarMask all = all_vars(I.ring()->nvars());
    keep &= all;
    if (keep == all) return Ideal(I.ring(), I.basis());
    const Basis& gb = I.basis(MonomialOrder::block(all & ~keep));
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb)
        if ((g.support() & ~keep) == 0) out.push_back(g);
    return Ideal(I.ring(), std::move(out));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep) {
    VarMask mask = 0;
    for (const std::string& n : keep) {
        auto idx = I.ring()->index_of(n);
        if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + n + "'");
        mask |= var_bit(*idx);
    }
    return eliminate(I, mask);
}

std::optional<std::vector<Monomial>> standard_monomials(const Basis& gb, const MonomialOrder& order,
                                                        std::size_t nvars, std::size_t limit) {
    std::vector<Monomial> lms;
    for (const Polynomial& g : gb) lms.push_back(g.leading_term(order).m);
    for (const Monomial& m : lms)
        if (m.is_one()) return std::vector<Monomial>{};
    std::vector<unsigned> bound(nvars, 0);
    for (std::size_t i = 0; i < nvars; ++i) {
        for (const Monomial& m : lms)
            if (m.support() == var_bit(i) && (bound[i] == 0 || m[i] < bound[i])) bound[i] = m[i];
        if (bound[i] == 0) return std::nullopt;
    }
    std::vector<Monomial> out;
    Monomial cur;
    // odometer over the box, pruning by divisibility (a divisible monomial stays divisible upward)
    std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
        if (v == nvars) {
            out.push_back(cur);
            return out.size() <= limit;
        }
        for (unsigned e = 0; e < bound[v]; ++e) {
            cur.set(v, e);
            bool divisible = false;
            for (const Monomial& m : lms)
                if (m.divides(cur)) {
                    divisible = true;
                    break;
                }
            if (divisible) break;
            if (!rec(v + 1)) return false;
        }
        cur.set(v, 0);
        return true;
    };
    if (!rec(0)) return std::nullopt;
    return out;
}

std::optional<std::size_t> quotient_dimension(const Ideal& I) {
    auto sm = standard_monomials(I.basis(), MonomialOrder::grevlex(), I.ring()->nvars());
    if (!sm) return std::nullopt;
    return sm->size();
}

}  // namespace gapvogel

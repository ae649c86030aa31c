#include "gapvogel/factor.hpp"

#include <algorithm>
#include <random>

#include "gapvogel/errors.hpp"
#include "gapvogel/upoly.hpp"

namespace gapvogel {

namespace {

using upoly::ZPoly;

constexpr std::size_t kMaxImageDegree = 800;
constexpr std::size_t kMaxRecombination = 24;

std::vector<std::size_t> support_vars(const Polynomial& p) {
    std::vector<std::size_t> vars;
    VarMask s = p.support();
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (s & var_bit(i)) vars.push_back(i);
    return vars;
}

// Integer coefficient of a primitive polynomial.
mpz_class int_coef(const Scalar& c) { return c.get_num(); }

ZPoly univariate_image(const Polynomial& p, std::size_t var) {
    ZPoly out(p.degree_in(var) + 1);
    for (const Term& t : p.terms()) out[t.m[var]] = int_coef(t.c);
    upoly::trim(out);
    return out;
}

Polynomial from_univariate(const RingPtr& ring, const ZPoly& f, std::size_t var) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f[k] != 0) ts.push_back({Monomial::variable(var, static_cast<unsigned>(k)), Scalar(f[k])});
    return Polynomial::from_terms(ring, std::move(ts));
}

struct Kronecker {
    std::vector<std::size_t> vars;
    std::vector<unsigned long> weight;  // weight[k] for vars[k]
    std::vector<unsigned> radix;
    std::size_t degree_bound = 0;

    ZPoly image(const Polynomial& p) const {
        ZPoly out(degree_bound + 1);
        for (const Term& t : p.terms()) {
            std::size_t idx = 0;
            for (std::size_t k = 0; k < vars.size(); ++k) idx += t.m[vars[k]] * weight[k];
            out[idx] = int_coef(t.c);
        }
        upoly::trim(out);
        return out;
    }

    Polynomial preimage(const RingPtr& ring, const ZPoly& f) const {
        std::vector<Term> ts;
        for (std::size_t idx = 0; idx < f.size(); ++idx) {
            if (f[idx] == 0) continue;
            Monomial m;
            std::size_t rest = idx;
            for (std::size_t k = 0; k < vars.size(); ++k) {
                m.set(vars[k], static_cast<unsigned>(rest % radix[k]));
                rest /= radix[k];
            }
            if (rest) return Polynomial(ring);
            ts.push_back({m, Scalar(f[idx])});
        }
        return Polynomial::from_terms(ring, std::move(ts));
    }
};

// Restriction to a random line x_i = a_i t + b_i that keeps the total degree and stays
// irreducible over Q proves irreducibility.
bool line_proves_irreducible(const Polynomial& g, std::mt19937_64& gen) {
    const unsigned d = g.total_degree();
    RingPtr line = Ring::make({"t"});
    Polynomial t = Polynomial::variable(line, 0);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < g.ring()->nvars(); ++i) {
            long a = static_cast<long>(gen() % 41) - 20;
            long b = static_cast<long>(gen() % 41) - 20;
            images.push_back(t * Scalar(a) + Polynomial(line, Scalar(b)));
        }
        Polynomial r = g.compose(images);
        if (r.is_zero() || r.total_degree() != d) continue;
        ZPoly z = univariate_image(r.primitive(), 0);
        auto fac = upoly::factor(z);
        if (fac.size() == 1 && fac[0].second == 1) return true;
    }
    return false;
}

bool degrees_fit(const Polynomial& h, const Polynomial& g, const std::vector<std::size_t>& vars) {
    for (std::size_t v : vars)
        if (h.degree_in(v) > g.degree_in(v)) return false;
    return true;
}

// Irreducible factors of a primitive polynomial without monomial content.
void factor_primitive(const Polynomial& g, std::vector<Factor>& out, std::mt19937_64& gen) {
    const RingPtr& ring = g.ring();
    if (g.total_degree() == 0) return;
    std::vector<std::size_t> vars = support_vars(g);
    if (g.total_degree() == 1) {
        out.push_back({g, 1});
        return;
    }
    if (vars.size() == 1) {
        for (auto& [f, e] : upoly::factor(univariate_image(g, vars[0])))
            out.push_back({from_univariate(ring, f, vars[0]), e});
        return;
    }
    // linear in a variable with constant coefficient
    for (std::size_t v : vars) {
        if (g.degree_in(v) != 1) continue;
        bool constant_coef = true;
        for (const Term& t : g.terms())
            if (t.m[v] == 1 && t.m.degree() != 1) constant_coef = false;
        if (constant_coef) {
            out.push_back({g, 1});
            return;
        }
    }
    if (line_proves_irreducible(g, gen)) {
        out.push_back({g, 1});
        return;
    }

    Kronecker kr;
    kr.vars = vars;
    unsigned long w = 1;
    for (std::size_t v : vars) {
        kr.weight.push_back(w);
        kr.radix.push_back(g.degree_in(v) + 1);
        kr.degree_bound += g.degree_in(v) * w;
        w *= g.degree_in(v) + 1;
        if (w > 64 * kMaxImageDegree) break;
    }
    if (kr.degree_bound > kMaxImageDegree || kr.weight.size() != vars.size())
        throw Error(ErrorCode::DecompositionIncomplete, "polynomial too large to factor: " + g.to_string());

    // Random translation avoids sparse images with many cyclotomic factors.
    std::vector<Scalar> shift(ring->nvars(), Scalar(0));
    for (std::size_t v : vars) shift[v] = Scalar(static_cast<long>(gen() % 7) - 3);
    std::vector<Scalar> unshift(shift.size());
    for (std::size_t i = 0; i < shift.size(); ++i) unshift[i] = -shift[i];
    Polynomial cur = g.translate(shift).primitive();

    std::vector<ZPoly> pieces;
    for (auto& [f, e] : upoly::factor(kr.image(cur)))
        for (unsigned k = 0; k < e; ++k) pieces.push_back(f);
    if (pieces.size() > kMaxRecombination)
        throw Error(ErrorCode::DecompositionIncomplete, "too many modular factors: " + g.to_string());

    std::vector<Polynomial> found;
    std::size_t s = 1;
    while (2 * s <= pieces.size()) {
        bool hit = false;
        std::vector<std::size_t> comb(s);
        for (std::size_t i = 0; i < s; ++i) comb[i] = i;
        for (;;) {
            ZPoly prod = {mpz_class(1)};
            for (std::size_t k : comb) prod = upoly::mul(prod, pieces[k]);
            Polynomial h = kr.preimage(ring, prod);
            Polynomial q(ring);
            if (!h.is_zero() && h.total_degree() > 0) {
                h = h.primitive();
                if (degrees_fit(h, cur, vars) && divide_exact(cur, h, &q)) {
                    found.push_back(h);
                    cur = q.primitive();
                    std::vector<ZPoly> rest;
                    for (std::size_t i = 0; i < pieces.size(); ++i)
                        if (std::find(comb.begin(), comb.end(), i) == comb.end()) rest.push_back(pieces[i]);
                    pieces = std::move(rest);
                    hit = true;
                    break;
                }
            }
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && comb[i] == pieces.size() - s + static_cast<std::size_t>(i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (cur.total_degree() > 0) found.push_back(cur);
    for (const Polynomial& h : found) {
        Polynomial back = h.translate(unshift).primitive();
        auto it = std::find_if(out.begin(), out.end(), [&](const Factor& f) { return f.p == back; });
        if (it != out.end())
            ++it->multiplicity;
        else
            out.push_back({back, 1});
    }
}

}  // namespace

Polynomial Factorization::expand(const RingPtr& ring) const {
    Polynomial r(ring, unit);
    for (const Factor& f : factors) r *= f.p.pow(f.multiplicity);
    return r;
}

Factorization factor(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    const RingPtr& ring = p.ring();
    Factorization result;
    Polynomial g = p.primitive();
    if (g.is_constant()) {
        result.unit = p.constant_coefficient();
        return result;
    }
    std::vector<Factor> out;
    // monomial content
    Monomial mc = g.terms()[0].m;
    for (const Term& t : g.terms()) mc = mc.gcd(t.m);
    if (!mc.is_one()) {
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            if (mc[i]) out.push_back({Polynomial::variable(ring, i), mc[i]});
        std::vector<Term> ts;
        for (const Term& t : g.terms()) ts.push_back({t.m / mc, t.c});
        g = Polynomial::from_terms(ring, std::move(ts));
    }
    std::mt19937_64 gen(0x9e3779b97f4a7c15ull);
    std::vector<Factor> rest;
    factor_primitive(g, rest, gen);
    out.insert(out.end(), rest.begin(), rest.end());
    // merge duplicates and fix the unit so that expand() reproduces p
    std::vector<Factor> merged;
    for (Factor& f : out) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const Factor& m) { return m.p == f.p; });
        if (it != merged.end())
            it->multiplicity += f.multiplicity;
        else
            merged.push_back(f);
    }
    std::sort(merged.begin(), merged.end(),
              [](const Factor& a, const Factor& b) { return compare(a.p, b.p) < 0; });
    result.factors = std::move(merged);
    result.unit = 1;
    Polynomial e = result.expand(ring);
    result.unit = p.terms()[0].c / e.terms()[0].c;
    return result;
}

bool is_irreducible(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return false;
    Factorization f = factor(p);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

std::vector<Polynomial> irreducible_factors(const Polynomial& p) {
    std::vector<Polynomial> out;
    for (const Factor& f : factor(p).factors) out.push_back(f.p);
    return out;
}

}  // namespace gapvogel

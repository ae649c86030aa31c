#include "gapvogel/decompose.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "gapvogel/errors.hpp"
#include "gapvogel/factor.hpp"
#include "gapvogel/ideal_ops.hpp"

namespace gapvogel {

namespace {

VarMask max_independent(const std::vector<Monomial>& lms, std::size_t n) {
    std::vector<VarMask> supp;
    for (const Monomial& m : lms) supp.push_back(m.support());
    VarMask best = 0;
    int best_size = -1;
    std::function<void(std::size_t, VarMask, int)> dfs = [&](std::size_t i, VarMask cur, int size) {
        if (size + static_cast<int>(n - i) <= best_size) return;
        if (i == n) {
            best = cur;
            best_size = size;
            return;
        }
        VarMask with = cur | var_bit(i);
        bool ok = std::all_of(supp.begin(), supp.end(), [&](VarMask s) { return (s & ~with) != 0; });
        if (ok) dfs(i + 1, with, size + 1);
        dfs(i + 1, cur, size);
    };
    dfs(0, 0, 0);
    return best;
}

// Number of monomials in the variables of mask not divisible by any of the restricted lms.
std::optional<std::size_t> count_standard(const std::vector<Monomial>& lms, VarMask mask, std::size_t limit) {
    std::vector<Monomial> r;
    for (const Monomial& m : lms) r.push_back(m.restricted(mask));
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (mask & var_bit(i)) vars.push_back(i);
    for (std::size_t v : vars) {
        bool bounded = std::any_of(r.begin(), r.end(), [&](const Monomial& m) { return m.support() == var_bit(v); });
        if (!bounded) return std::nullopt;
    }
    std::size_t count = 0;
    Monomial cur;
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == vars.size()) return ++count <= limit;
        for (unsigned e = 0;; ++e) {
            cur.set(vars[k], e);
            bool divisible = std::any_of(r.begin(), r.end(), [&](const Monomial& m) { return m.divides(cur); });
            if (divisible) break;
            if (!rec(k + 1)) return false;
        }
        cur.set(vars[k], 0);
        return true;
    };
    if (!rec(0)) return std::nullopt;
    return count;
}

// Linear in x with constant coefficient.
bool solvable_for(const Polynomial& g, std::size_t x, Scalar* coef) {
    if (g.degree_in(x) != 1) return false;
    for (const Term& t : g.terms()) {
        if (t.m[x] == 0) continue;
        if (t.m.degree() != 1) return false;
        *coef = t.c;
    }
    return true;
}

bool involves(const Polynomial& p, VarMask mask) { return (p.support() & mask) != 0; }

struct FactorInfo {
    bool ok = false;
    std::vector<Polynomial> distinct;
    bool repeated = false;
};

class Decomposer {
public:
    explicit Decomposer(RingPtr ring) : ring_(std::move(ring)), gen_(0x5eedu) {}

    void run(const Ideal& J) {
        if (J.is_unit()) return;
        if (!visited_.insert(J.key()).second) return;
        if (prime_shortcut(J)) {
            leaves_.push_back(J);
            return;
        }
        for (const Polynomial& g : J.basis()) {
            const FactorInfo& fi = factors_of(g);
            if (!fi.ok) continue;
            if (fi.distinct.size() > 1) {
                for (const Polynomial& p : fi.distinct) run(J.with(p));
                return;
            }
            if (fi.repeated) {
                run(J.with(fi.distinct[0]));
                return;
            }
        }
        general(J);
    }

    std::vector<Ideal> leaves() const { return leaves_; }

private:
    const FactorInfo& factors_of(const Polynomial& g) {
        std::string k = g.to_string();
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        FactorInfo fi;
        if (!g.is_constant()) {
            try {
                Factorization f = factor(g);
                fi.ok = true;
                for (const Factor& x : f.factors) {
                    fi.distinct.push_back(x.p);
                    if (x.multiplicity > 1) fi.repeated = true;
                }
            } catch (const Error& e) {
                if (e.code() != ErrorCode::DecompositionIncomplete) throw;
            }
        }
        return cache_.emplace(k, std::move(fi)).first->second;
    }

    // Eliminate variables solvable with constant coefficient; the quotient is then a
    // polynomial ring modulo the remaining generators.
    bool prime_shortcut(const Ideal& J) {
        std::vector<Polynomial> S = J.basis();
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t k = 0; k < S.size() && !progress; ++k) {
                for (std::size_t x = 0; x < ring_->nvars(); ++x) {
                    Scalar c;
                    if (!solvable_for(S[k], x, &c)) continue;
                    Polynomial value = (S[k] - Polynomial::variable(ring_, x) * c) * Scalar(-1 / c);
                    std::vector<Polynomial> images;
                    for (std::size_t i = 0; i < ring_->nvars(); ++i)
                        images.push_back(i == x ? value : Polynomial::variable(ring_, i));
                    std::vector<Polynomial> next;
                    for (std::size_t m = 0; m < S.size(); ++m) {
                        if (m == k) continue;
                        Polynomial r = S[m].compose(images);
                        if (!r.is_zero()) next.push_back(r);
                    }
                    S = std::move(next);
                    progress = true;
                    break;
                }
            }
        }
        if (S.empty()) return true;
        if (S.size() > 1) S = groebner_basis(ring_, S, MonomialOrder::grevlex());
        if (S.size() != 1 || S[0].is_constant()) return false;
        const FactorInfo& fi = factors_of(S[0].primitive());
        return fi.ok && fi.distinct.size() == 1 && !fi.repeated;
    }

    void general(const Ideal& J) {
        const std::size_t n = ring_->nvars();
        const VarMask all = all_vars(n);
        const VarMask U = independent_set(J);
        const VarMask nonU = all & ~U;
        const MonomialOrder block = MonomialOrder::block(nonU);
        const Basis& gb = J.basis(block);

        std::vector<Polynomial> lcs;
        std::vector<Monomial> lms;
        for (const Polynomial& g : gb) {
            Monomial lm = g.leading_term(block).m;
            lms.push_back(lm);
            Monomial head = lm.restricted(nonU);
            std::vector<Term> ts;
            for (const Term& t : g.terms())
                if (t.m.restricted(nonU) == head) ts.push_back({t.m.restricted(U), t.c});
            Polynomial lc = Polynomial::from_terms(ring_, std::move(ts));
            if (!lc.is_constant()) lcs.push_back(lc.primitive());
        }
        if (!lcs.empty()) {
            Ideal Js = J;
            for (const Polynomial& lc : lcs) Js = saturate(Js, lc);
            if (Js != J) {
                run(Js);
                for (const Polynomial& lc : lcs) {
                    const FactorInfo& fi = factors_of(lc);
                    if (fi.ok)
                        for (const Polynomial& p : fi.distinct) run(J.with(p));
                    else
                        run(J.with(lc));
                }
                return;
            }
        }
        auto D = count_standard(lms, nonU, 100000);
        if (!D) throw incomplete(J, "extension is not zero-dimensional");
        if (*D == 1) {
            leaves_.push_back(J);
            return;
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (!(nonU & var_bit(x))) continue;
            Ideal E = eliminate(J, U | var_bit(x));
            if (E.generators().size() != 1) throw incomplete(J, "eliminant is not principal");
            const Polynomial F = E.generators()[0];
            const FactorInfo& fi = factors_of(F);
            if (!fi.ok) throw incomplete(J, "cannot factor eliminant");
            std::vector<Polynomial> xf;
            for (const Polynomial& p : fi.distinct)
                if (involves(p, var_bit(x))) xf.push_back(p);
            if (xf.size() > 1) {
                for (const Polynomial& p : xf) run(J.with(p));
                return;
            }
            if (fi.repeated) {
                run(J.with(xf[0]));
                return;
            }
            if (F.degree_in(x) == *D) {
                leaves_.push_back(J);
                return;
            }
        }
        // primitive element over Q(U)
        RingPtr ext = ring_->extended({"_t"});
        const std::size_t t = n;
        Ideal Jext = J.in_ring(ext);
        for (int attempt = 0; attempt < 6; ++attempt) {
            Polynomial ell(ring_);
            for (std::size_t x = 0; x < n; ++x) {
                if (!(nonU & var_bit(x))) continue;
                long c = static_cast<long>(gen_() % 19) - 9;
                if (c == 0) c = 1;
                ell += Polynomial::variable(ring_, x) * Scalar(c);
            }
            Ideal E = eliminate(Jext.with(Polynomial::variable(ext, t) - ell.in_ring(ext)), U | var_bit(t));
            if (E.generators().size() != 1) throw incomplete(J, "eliminant is not principal");
            const Polynomial F = E.generators()[0];
            const FactorInfo& fi = factors_of(F);
            if (!fi.ok) throw incomplete(J, "cannot factor eliminant");
            std::vector<Polynomial> tf;
            for (const Polynomial& p : fi.distinct)
                if (involves(p, var_bit(t))) tf.push_back(p);
            if (tf.size() > 1) {
                std::vector<Polynomial> images;
                for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(ring_, i));
                images.push_back(ell);
                for (const Polynomial& p : tf) run(J.with(p.compose(images)));
                return;
            }
            if (!fi.repeated && F.degree_in(t) == *D) {
                leaves_.push_back(J);
                return;
            }
        }
        throw incomplete(J, "no primitive element found");
    }

    Error incomplete(const Ideal& J, const std::string& why) {
        return Error(ErrorCode::DecompositionIncomplete, "cannot certify primality (" + why + ")",
                     J.canonical_strings());
    }

    RingPtr ring_;
    std::mt19937_64 gen_;
    std::set<std::string> visited_;
    std::vector<Ideal> leaves_;
    std::map<std::string, FactorInfo> cache_;
};

Ideal max_ideal(const RingPtr& ring, const std::vector<Scalar>& q) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        gens.push_back(Polynomial::variable(ring, i) - Polynomial(ring, q[i]));
    return Ideal(ring, std::move(gens));
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
        if (v + 1 == n) {
            cur.set(v, left);
            out.push_back(cur);
            cur.set(v, 0);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur.set(v, e);
            rec(v + 1, left - e);
        }
        cur.set(v, 0);
    };
    rec(0, d);
    return out;
}

long madic_length(const Ideal& I, const std::vector<Scalar>& q) {
    const RingPtr& ring = I.ring();
    const std::size_t n = ring->nvars();
    std::vector<Polynomial> shifted;
    for (const Polynomial& g : I.basis()) shifted.push_back(g.translate(q));
    long prev = -1;
    for (unsigned N = 1; N <= 400; ++N) {
        std::vector<Polynomial> gens;
        for (const Polynomial& g : shifted) {
            std::vector<Term> low;
            for (const Term& t : g.terms())
                if (t.m.degree() < N) low.push_back(t);
            if (!low.empty()) gens.push_back(Polynomial::from_terms(ring, std::move(low)));
        }
        for (const Monomial& m : monomials_of_degree(n, N)) gens.push_back(Polynomial::monomial(ring, m));
        auto d = quotient_dimension(Ideal(ring, std::move(gens)));
        long v = static_cast<long>(*d);
        if (v == prev) return v;
        prev = v;
    }
    throw Error(ErrorCode::PreconditionFailed, "local length did not stabilize", I.canonical_strings());
}

// Length at a zero-dimensional prime P through its primary component I : (I : P^inf)^inf.
long zero_dim_length(const Ideal& I, const Ideal& P) {
    Ideal away = saturate(I, P);
    Ideal part = saturate(I, away);
    auto num = quotient_dimension(part);
    auto den = quotient_dimension(P);
    if (!num || !den || *den == 0 || *num % *den != 0)
        throw Error(ErrorCode::PreconditionFailed, "primary part is not supported at the prime", I.canonical_strings());
    return static_cast<long>(*num / *den);
}

bool is_radical_zero_dim(const Ideal& J) {
    auto d = quotient_dimension(J);
    if (!d) return false;
    std::size_t total = 0;
    for (const PrimeComponent& c : minimal_primes(J)) {
        if (c.dim != 0) return false;
        total += *quotient_dimension(c.prime);
    }
    return total == *d;
}

std::optional<long> slice_probe(const Ideal& I, const PrimeComponent& P, Rng& rng) {
    const RingPtr& ring = I.ring();
    VarMask U = independent_set(P.prime);
    std::vector<Polynomial> L;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (U & var_bit(i))
            L.push_back(Polynomial::variable(ring, i) - Polynomial(ring, Scalar(rng.uniform(-kSliceBound, kSliceBound))));
    Ideal PL = P.prime.with(L);
    if (dimension(PL) != std::optional<int>(0) || !is_radical_zero_dim(PL)) return std::nullopt;
    Ideal IL = I.with(L);
    Ideal away = saturate(IL, PL);
    Ideal part = saturate(IL, away);
    auto num = quotient_dimension(part);
    auto den = quotient_dimension(PL);
    if (!num || !den || *den == 0 || *num % *den != 0) return std::nullopt;
    return static_cast<long>(*num / *den);
}

}  // namespace

VarMask independent_set(const Ideal& I) {
    std::vector<Monomial> lms;
    for (const Polynomial& g : I.basis()) lms.push_back(g.leading_term(MonomialOrder::grevlex()).m);
    return max_independent(lms, I.ring()->nvars());
}

std::optional<int> dimension(const Ideal& I) {
    if (I.is_unit()) return std::nullopt;
    return std::popcount(independent_set(I));
}

std::vector<PrimeComponent> minimal_primes(const Ideal& I) {
    Decomposer dec(I.ring());
    dec.run(I);
    std::vector<Ideal> leaves = dec.leaves();
    std::vector<PrimeComponent> comps;
    std::set<std::string> seen;
    for (const Ideal& P : leaves) {
        bool redundant = false;
        for (const Ideal& Q : leaves)
            if (Q.key() != P.key() && P.contains(Q)) {
                redundant = true;
                break;
            }
        if (redundant || !seen.insert(P.key()).second) continue;
        comps.emplace_back(Ideal(I.ring(), P.basis()), *dimension(P));
    }
    std::sort(comps.begin(), comps.end(), [](const PrimeComponent& a, const PrimeComponent& b) {
        return a.dim != b.dim ? a.dim > b.dim : a.key < b.key;
    });
    return comps;
}

std::optional<std::vector<Scalar>> rational_point(const Ideal& p) {
    const std::size_t n = p.ring()->nvars();
    const Basis& gb = p.basis();
    if (gb.size() != n) return std::nullopt;
    std::vector<Scalar> q(n);
    std::vector<bool> set(n, false);
    for (const Polynomial& g : gb) {
        if (g.total_degree() != 1) return std::nullopt;
        std::size_t var = n;
        for (const Term& t : g.terms()) {
            if (t.m.is_one()) continue;
            if (var != n) return std::nullopt;
            for (std::size_t i = 0; i < n; ++i)
                if (t.m[i]) var = i;
        }
        if (var == n || set[var]) return std::nullopt;
        Scalar lead = g.coefficient(Monomial::variable(var));
        q[var] = -g.constant_coefficient() / lead;
        set[var] = true;
    }
    return q;
}

long length_at_point(const Ideal& I, const std::vector<Scalar>& q) {
    Ideal m = max_ideal(I.ring(), q);
    if ((I + m).is_unit()) return 0;
    if (!(saturate(I, m) + m).is_unit())
        throw Error(ErrorCode::PreconditionFailed, "point is not isolated in the scheme", I.canonical_strings());
    return madic_length(I, q);
}

long local_length(const Ideal& I, const PrimeComponent& p, Rng& rng) {
    if (p.dim == 0) {
        if (auto q = rational_point(p.prime)) return madic_length(I, *q);
        return zero_dim_length(I, p.prime);
    }
    // Accept the first value seen twice; a degenerate probe or a second distinct value counts as a miss.
    std::vector<long> values;
    int misses = 0;
    for (;;) {
        auto v = slice_probe(I, p, rng);
        if (v && std::find(values.begin(), values.end(), *v) != values.end()) return *v;
        if (!v || !values.empty()) ++misses;
        if (misses >= 2)
            throw Error(ErrorCode::SliceFailure,
                        v ? "slices disagree on the local length" : "random slice degenerate twice",
                        p.prime.canonical_strings());
        if (v) values.push_back(*v);
    }
}

Cycle cycle_of_scheme(const Ideal& I, Rng& rng) {
    Cycle c(I.ring());
    for (const PrimeComponent& p : minimal_primes(I)) c.add(p, local_length(I, p, rng));
    return c;
}

}  // namespace gapvogel

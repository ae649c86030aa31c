#include "gapvogel/upoly.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "gapvogel/errors.hpp"

namespace gapvogel::upoly {

using u64 = std::uint64_t;

void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

ZPoly derivative(const ZPoly& a) {
    ZPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const mpz_class& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive(const ZPoly& a) {
    ZPoly r = a;
    trim(r);
    if (r.empty()) return r;
    mpz_class g = content(r);
    if (r.back() < 0) g = -g;
    for (mpz_class& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly* q) {
    if (b.empty()) throw Error(ErrorCode::ZeroPolynomial, "division by zero");
    ZPoly r = a;
    trim(r);
    if (r.empty()) {
        if (q) q->clear();
        return true;
    }
    int db = degree(b);
    if (degree(r) < db) return false;
    ZPoly quo(static_cast<std::size_t>(degree(r) - db + 1));
    mpz_class c;
    for (int k = degree(r); k >= db; --k) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
        mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
        quo[k - db] = c;
        for (int i = 0; i <= db; ++i) mpz_submul(r[k - db + i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
    }
    trim(r);
    if (!r.empty()) return false;
    trim(quo);
    if (q) *q = std::move(quo);
    return true;
}

namespace {

// Pseudo-remainder of a by b.
ZPoly prem(ZPoly a, const ZPoly& b) {
    int db = degree(b);
    const mpz_class& lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        mpz_class la = a.back();
        int shift = degree(a) - db;
        for (mpz_class& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
        trim(a);
    }
    return a;
}

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = primitive(a0), b = primitive(b0);
    if (a.empty()) return b;
    if (b.empty()) return a;
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), content(a0).get_mpz_t(), content(b0).get_mpz_t());
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = prem(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    a = primitive(a);
    for (mpz_class& x : a) x *= c;
    return a;
}

std::vector<std::pair<ZPoly, unsigned>> squarefree(const ZPoly& f0) {
    ZPoly f = primitive(f0);
    std::vector<std::pair<ZPoly, unsigned>> out;
    if (degree(f) <= 0) return out;
    ZPoly fp = derivative(f);
    ZPoly g = gcd(f, fp);
    if (degree(g) == 0) {
        out.push_back({f, 1});
        return out;
    }
    ZPoly c, d, tmp;
    divide_exact(f, g, &c);
    divide_exact(fp, g, &tmp);
    d = sub(tmp, derivative(c));
    for (unsigned i = 1; degree(c) > 0; ++i) {
        ZPoly a = gcd(c, d);
        if (degree(a) > 0) out.push_back({primitive(a), i});
        ZPoly c2;
        divide_exact(c, a, &c2);
        divide_exact(d, a, &tmp);
        c = std::move(c2);
        d = sub(tmp, derivative(c));
    }
    return out;
}

namespace {

// ---- arithmetic mod p (p < 2^31) ----

void mtrim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int mdeg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

u64 inv(u64 a, u64 p) { return powmod(a, p - 2, p); }

ModPoly mmul(const ModPoly& a, const ModPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
    ModPoly r(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<u64>(acc[k] % p);
    mtrim(r);
    return r;
}

void mdivrem(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* q, ModPoly* r) {
    ModPoly rem = a;
    mtrim(rem);
    int db = mdeg(b);
    u64 linv = inv(b.back(), p);
    ModPoly quo;
    if (mdeg(rem) >= db) quo.assign(static_cast<std::size_t>(mdeg(rem) - db + 1), 0);
    for (int k = mdeg(rem); k >= db; --k) {
        u64 c = rem[k] % p;
        if (!c) continue;
        c = c * linv % p;
        quo[k - db] = c;
        for (int i = 0; i <= db; ++i) rem[k - db + i] = (rem[k - db + i] + (p - c) * b[i]) % p;
    }
    mtrim(rem);
    mtrim(quo);
    if (q) *q = std::move(quo);
    if (r) *r = std::move(rem);
}

ModPoly mrem(const ModPoly& a, const ModPoly& b, u64 p) {
    ModPoly r;
    mdivrem(a, b, p, nullptr, &r);
    return r;
}

ModPoly mmonic(ModPoly a, u64 p) {
    mtrim(a);
    if (a.empty()) return a;
    u64 li = inv(a.back(), p);
    for (u64& c : a) c = c * li % p;
    return a;
}

ModPoly msub(const ModPoly& a, const ModPoly& b, u64 p) {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    mtrim(r);
    return r;
}

ModPoly mgcd(ModPoly a, ModPoly b, u64 p) {
    mtrim(a);
    mtrim(b);
    while (!b.empty()) {
        ModPoly r = mrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mmonic(a, p);
}

// s*a + t*b = gcd(a, b) (monic).
ModPoly mxgcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* s, ModPoly* t) {
    ModPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    mtrim(r0);
    mtrim(r1);
    while (!r1.empty()) {
        ModPoly q, r;
        mdivrem(r0, r1, p, &q, &r);
        ModPoly s2 = msub(s0, mmul(q, s1, p), p);
        ModPoly t2 = msub(t0, mmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 li = inv(r0.back(), p);
    for (u64& c : r0) c = c * li % p;
    for (u64& c : s0) c = c * li % p;
    for (u64& c : t0) c = c * li % p;
    if (s) *s = s0;
    if (t) *t = t0;
    return r0;
}

ModPoly mpowmod(const ModPoly& base, u64 e, const ModPoly& mod, u64 p) {
    ModPoly result = {1};
    ModPoly b = mrem(base, mod, p);
    while (e) {
        if (e & 1) result = mrem(mmul(result, b, p), mod, p);
        e >>= 1;
        if (e) b = mrem(mmul(b, b, p), mod, p);
    }
    return result;
}

ModPoly mderivative(const ModPoly& a, u64 p) {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
    mtrim(r);
    return r;
}

ModPoly reduce_mod(const ZPoly& a, u64 p) {
    ModPoly r(a.size());
    mpz_class t;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_fdiv_r_ui(t.get_mpz_t(), a[i].get_mpz_t(), p);
        r[i] = t.get_ui();
    }
    mtrim(r);
    return r;
}

// Kernel of the n x n matrix A mod p (A v = 0), as a list of vectors.
std::vector<std::vector<u64>> nullspace(std::vector<std::vector<u64>> A, u64 p) {
    const std::size_t n = A.size();
    std::vector<int> pivot_col_of_row;
    std::vector<int> is_pivot(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(A[piv], A[row]);
        u64 li = inv(A[row][col], p);
        for (u64& x : A[row]) x = x * li % p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || A[r][col] == 0) continue;
            u64 f = A[r][col];
            for (std::size_t c = 0; c < n; ++c) A[r][c] = (A[r][c] + (p - f) * A[row][c]) % p;
        }
        is_pivot[col] = static_cast<int>(row);
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<std::vector<u64>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f] >= 0) continue;
        std::vector<u64> v(n, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) v[pivot_col_of_row[r]] = (p - A[r][f]) % p;
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

std::vector<ModPoly> factor_mod_p(const ModPoly& f0, u64 p, u64 seed) {
    ModPoly f = mmonic(f0, p);
    const int n = mdeg(f);
    if (n <= 1) return {f};
    // Berlekamp matrix: row i holds x^(i p) mod f.
    ModPoly xp = mpowmod(ModPoly{0, 1}, p, f, p);
    std::vector<ModPoly> rows(n);
    rows[0] = {1};
    for (int i = 1; i < n; ++i) rows[i] = mrem(mmul(rows[i - 1], xp, p), f, p);
    std::vector<std::vector<u64>> A(n, std::vector<u64>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            u64 q = j < static_cast<int>(rows[i].size()) ? rows[i][j] : 0;
            if (i == j) q = (q + p - 1) % p;
            A[j][i] = q;
        }
    }
    auto kernel = nullspace(A, p);
    const std::size_t r = kernel.size();
    std::vector<ModPoly> factors = {f};
    if (r == 1) return factors;
    std::mt19937_64 gen(seed);
    const u64 half = (p - 1) / 2;
    while (factors.size() < r) {
        ModPoly v(n, 0);
        for (const auto& kv : kernel) {
            u64 c = gen() % p;
            for (int i = 0; i < n; ++i) v[i] = (v[i] + c * kv[i]) % p;
        }
        mtrim(v);
        if (mdeg(v) <= 0) continue;
        std::vector<ModPoly> next;
        for (const ModPoly& g : factors) {
            if (mdeg(g) <= 1) {
                next.push_back(g);
                continue;
            }
            ModPoly w = mpowmod(v, half, g, p);
            w = msub(w, ModPoly{1}, p);
            ModPoly d = mgcd(g, w, p);
            if (mdeg(d) > 0 && mdeg(d) < mdeg(g)) {
                ModPoly q;
                mdivrem(g, d, p, &q, nullptr);
                next.push_back(d);
                next.push_back(mmonic(q, p));
            } else {
                next.push_back(g);
            }
        }
        factors = std::move(next);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

namespace {

void mod_symmetric(mpz_class& c, const mpz_class& m, const mpz_class& half) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r = mul(a, b);
    for (mpz_class& c : r) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(r);
    return r;
}

ZPoly to_z(const ModPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

// Lift monic factors g_i with f = lc * prod g_i mod p to the same identity mod p^a.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& gs, u64 p, unsigned a) {
    const std::size_t r = gs.size();
    // Partial fraction coefficients: s_i = (prod_{j != i} g_j)^(-1) mod g_i.
    std::vector<ModPoly> s(r);
    for (std::size_t i = 0; i < r; ++i) {
        ModPoly other = {1};
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) other = mmul(other, gs[j], p);
        ModPoly si, ti;
        mxgcd(mrem(other, gs[i], p), gs[i], p, &si, &ti);
        s[i] = si;
    }
    mpz_class pm = static_cast<unsigned long>(p);
    mpz_class mod_full;
    mpz_pow_ui(mod_full.get_mpz_t(), pm.get_mpz_t(), a);
    mpz_class lcinv;
    mpz_invert(lcinv.get_mpz_t(), f.back().get_mpz_t(), mod_full.get_mpz_t());
    ZPoly F = f;
    for (mpz_class& c : F) {
        c *= lcinv;
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), mod_full.get_mpz_t());
    }
    std::vector<ZPoly> g(r);
    for (std::size_t i = 0; i < r; ++i) g[i] = to_z(gs[i]);
    mpz_class pk = pm;
    for (unsigned k = 1; k < a; ++k) {
        mpz_class next = pk * pm;
        ZPoly prod = {1};
        for (const ZPoly& gi : g) prod = mul_mod(prod, gi, next);
        ZPoly e = sub(F, prod);
        ModPoly em(e.size());
        mpz_class t;
        for (std::size_t i = 0; i < e.size(); ++i) {
            mpz_fdiv_r(t.get_mpz_t(), e[i].get_mpz_t(), next.get_mpz_t());
            mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), pk.get_mpz_t());
            em[i] = t.get_ui() % p;
        }
        mtrim(em);
        if (!em.empty()) {
            for (std::size_t i = 0; i < r; ++i) {
                ModPoly d = mrem(mmul(em, s[i], p), gs[i], p);
                for (std::size_t c = 0; c < d.size(); ++c) g[i][c] += pk * static_cast<unsigned long>(d[c]);
            }
        }
        pk = next;
    }
    return g;
}

std::vector<ZPoly> zassenhaus(const ZPoly& f, u64 seed) {
    const int n = degree(f);
    if (n <= 1) return {f};
    // prime selection: a few good primes, keep the one with fewest modular factors
    std::vector<ModPoly> best;
    u64 best_p = 0;
    mpz_class cand = 2147483647ul;
    int good = 0;
    for (int attempts = 0; attempts < 200 && good < 3; ++attempts) {
        u64 p = cand.get_ui();
        mpz_class next;
        mpz_sub_ui(cand.get_mpz_t(), cand.get_mpz_t(), 2);
        mpz_nextprime(next.get_mpz_t(), cand.get_mpz_t());
        while (next >= p) {
            mpz_sub_ui(cand.get_mpz_t(), cand.get_mpz_t(), 2);
            mpz_nextprime(next.get_mpz_t(), cand.get_mpz_t());
        }
        cand = next;
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
        ModPoly fp = reduce_mod(f, p);
        if (mdeg(mgcd(fp, mderivative(fp, p), p)) > 0) continue;
        ++good;
        auto fac = factor_mod_p(fp, p, seed + static_cast<u64>(attempts));
        if (fac.size() == 1) return {f};
        if (best.empty() || fac.size() < best.size()) {
            best = std::move(fac);
            best_p = p;
        }
    }
    if (best.empty()) throw Error(ErrorCode::DecompositionIncomplete, "no suitable prime for factorization");
    // coefficient bound for factors times the leading coefficient
    mpz_class norm2 = 0;
    for (const mpz_class& c : f) norm2 += c * c;
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound += 1;
    bound <<= static_cast<unsigned>(n + 1);
    bound *= abs(f.back());
    mpz_class pm = static_cast<unsigned long>(best_p), M = pm;
    unsigned a = 1;
    while (M <= bound) {
        M *= pm;
        ++a;
    }
    std::vector<ZPoly> lifted = hensel_lift(f, best, best_p, a);
    mpz_class half = M / 2;

    std::vector<ZPoly> result;
    ZPoly cur = f;
    std::vector<std::size_t> idx(lifted.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::size_t s = 1;
    while (2 * s <= idx.size()) {
        bool found = false;
        std::vector<std::size_t> comb(s);
        for (std::size_t i = 0; i < s; ++i) comb[i] = i;
        for (;;) {
            mpz_class lc = cur.back();
            ZPoly cand_poly = {lc};
            for (std::size_t k : comb) cand_poly = mul_mod(cand_poly, lifted[idx[k]], M);
            for (mpz_class& c : cand_poly) mod_symmetric(c, M, half);
            trim(cand_poly);
            bool plausible = true;
            if (cur[0] != 0 && !cand_poly.empty()) {
                mpz_class c0 = cand_poly[0];
                mpz_class target = cur[0] * lc;
                plausible = c0 != 0 && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t());
            }
            if (plausible) {
                ZPoly g = primitive(cand_poly);
                ZPoly q;
                if (degree(g) > 0 && divide_exact(cur, g, &q)) {
                    result.push_back(g);
                    cur = primitive(q);
                    std::vector<std::size_t> rest;
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        if (std::find(comb.begin(), comb.end(), i) == comb.end()) rest.push_back(idx[i]);
                    idx = std::move(rest);
                    found = true;
                    break;
                }
            }
            // next combination
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && comb[i] == idx.size() - s + static_cast<std::size_t>(i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (degree(cur) > 0) result.push_back(primitive(cur));
    return result;
}

}  // namespace

std::vector<std::pair<ZPoly, unsigned>> factor(const ZPoly& f0) {
    ZPoly f = primitive(f0);
    std::vector<std::pair<ZPoly, unsigned>> out;
    if (degree(f) <= 0) return out;
    unsigned zeros = 0;
    while (f[zeros] == 0) ++zeros;
    if (zeros) {
        out.push_back({ZPoly{0, 1}, zeros});
        f.erase(f.begin(), f.begin() + zeros);
    }
    if (degree(f) <= 0) return out;
    for (auto& [part, mult] : squarefree(f)) {
        if (degree(part) == 1) {
            out.push_back({part, mult});
            continue;
        }
        if (degree(part) == 2) {
            mpz_class disc = part[1] * part[1] - 4 * part[0] * part[2];
            if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) {
                out.push_back({part, mult});
                continue;
            }
        }
        for (ZPoly& g : zassenhaus(part, 12345)) out.push_back({g, mult});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        for (std::size_t i = a.first.size(); i-- > 0;)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return a.second < b.second;
    });
    return out;
}

}  // namespace gapvogel::upoly

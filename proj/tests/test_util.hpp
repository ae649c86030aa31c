#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gapvogel/polynomial.hpp"

namespace testutil {

using namespace gapvogel;

inline RingPtr ring(std::vector<std::string> names) { return Ring::make(std::move(names)); }

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

inline std::vector<Polynomial> Ps(const RingPtr& r, const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(P(r, s));
    return out;
}

// Random dense-ish polynomial with small integer coefficients.
inline Polynomial random_poly(const RingPtr& r, std::mt19937_64& gen, unsigned max_deg, int terms,
                              int coef = 3) {
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        unsigned budget = static_cast<unsigned>(gen() % (max_deg + 1));
        for (unsigned d = 0; d < budget; ++d) {
            std::size_t v = gen() % r->nvars();
            m.set(v, m[v] + 1);
        }
        long c = static_cast<long>(gen() % (2 * coef + 1)) - coef;
        if (c == 0) c = 1;
        ts.push_back({m, Scalar(c)});
    }
    return Polynomial::from_terms(r, std::move(ts));
}

// dim_Q of Q[x]/(I + m^N) computed from scratch by linear algebra on truncated multiples.
inline long brute_force_length(const RingPtr& r, const std::vector<Polynomial>& gens, unsigned N) {
    std::vector<Monomial> low;
    std::function<void(std::size_t, Monomial, unsigned)> rec = [&](std::size_t v, Monomial m, unsigned left) {
        if (v == r->nvars()) {
            low.push_back(m);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            Monomial k = m;
            k.set(v, e);
            rec(v + 1, k, left - e);
        }
    };
    rec(0, Monomial(), N - 1);
    std::vector<std::vector<Scalar>> rows;
    for (const Polynomial& g : gens)
        for (const Monomial& m : low) {
            Polynomial h = g.mul_term(m, 1);
            std::vector<Scalar> row(low.size());
            for (const Term& t : h.terms()) {
                if (t.m.degree() >= N) continue;
                for (std::size_t k = 0; k < low.size(); ++k)
                    if (low[k] == t.m) row[k] = t.c;
            }
            rows.push_back(row);
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < low.size() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Scalar f = rows[i][col] / rows[rank][col];
            for (std::size_t c = col; c < low.size(); ++c) rows[i][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return static_cast<long>(low.size() - rank);
}

// Local length at the origin: brute-force lengths at N and N+1 must agree.
inline long brute_force_local_length(const RingPtr& r, const std::vector<Polynomial>& gens, unsigned N) {
    long a = brute_force_length(r, gens, N);
    return a == brute_force_length(r, gens, N + 1) ? a : -1;
}

}  // namespace testutil

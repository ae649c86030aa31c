#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

// Dense univariate polynomials over Z and Z/p, coefficients from degree 0 upwards.
namespace gapvogel::upoly {

using ZPoly = std::vector<mpz_class>;
using ModPoly = std::vector<std::uint64_t>;

void trim(ZPoly& a);
int degree(const ZPoly& a);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& a);
mpz_class content(const ZPoly& a);
// Primitive with positive leading coefficient.
ZPoly primitive(const ZPoly& a);
// Exact division in Z[x]; false if b does not divide a.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly* q);
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Square-free decomposition of a primitive polynomial: pairs (factor, multiplicity).
std::vector<std::pair<ZPoly, unsigned>> squarefree(const ZPoly& f);

// Monic irreducible factors mod p of a square-free monic polynomial.
std::vector<ModPoly> factor_mod_p(const ModPoly& f, std::uint64_t p, std::uint64_t seed);

// Irreducible factors (primitive, positive leading coefficient) of a primitive
// polynomial of positive degree, with multiplicities.
std::vector<std::pair<ZPoly, unsigned>> factor(const ZPoly& f);

}  // namespace gapvogel::upoly

#pragma once

#include <vector>

#include "gapvogel/polynomial.hpp"

namespace gapvogel {

struct Factor {
    Polynomial p;  // primitive, positive grevlex leading coefficient
    unsigned multiplicity;
};

struct Factorization {
    Scalar unit;
    std::vector<Factor> factors;  // canonically sorted

    Polynomial expand(const RingPtr& ring) const;
};

// Factorization over Q into irreducibles. Throws ZeroPolynomial on 0 and
// DecompositionIncomplete when the Kronecker image is too large to handle.
Factorization factor(const Polynomial& p);

// Non-constant and irreducible over Q.
bool is_irreducible(const Polynomial& p);

// Distinct irreducible factors, canonically sorted.
std::vector<Polynomial> irreducible_factors(const Polynomial& p);

}  // namespace gapvogel

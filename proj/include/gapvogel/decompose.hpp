#pragma once

#include <optional>
#include <vector>

#include "gapvogel/cycle.hpp"
#include "gapvogel/rng.hpp"

namespace gapvogel {

// Krull dimension of V(I); nullopt when I is the unit ideal.
std::optional<int> dimension(const Ideal& I);

// A maximal independent set of variables modulo the grevlex leading terms of I.
VarMask independent_set(const Ideal& I);

// Minimal primes over Q, sorted like cycle terms.
std::vector<PrimeComponent> minimal_primes(const Ideal& I);

// The rational point of a zero-dimensional prime, if V(p) is one.
std::optional<std::vector<Scalar>> rational_point(const Ideal& p);

// Length of the local ring of R/I at the minimal prime p.
long local_length(const Ideal& I, const PrimeComponent& p, Rng& rng);

// Length at the rational point q of R/I, by m-adic stabilization; 0 when q is not in V(I).
// Throws PreconditionFailed when q is not an isolated point of V(I).
long length_at_point(const Ideal& I, const std::vector<Scalar>& q);

Cycle cycle_of_scheme(const Ideal& I, Rng& rng);

}  // namespace gapvogel

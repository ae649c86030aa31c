#pragma once

#include <utility>

#include "gapvogel/decompose.hpp"

namespace gapvogel {

// C minus W: drops the components contained in V(W).
Cycle cycle_not(const Cycle& C, const Ideal& W);

// C . V(f), component by component. Throws ImproperIntersection when f vanishes on a component.
Cycle intersect_hypersurface(const Cycle& C, const Polynomial& f, Rng& rng);

// (components contained in V(Z), the rest).
std::pair<Cycle, Cycle> split_by_variety(const Cycle& C, const Ideal& Z);

// Every component has dimension i (true for the zero cycle).
bool purity_check(const Cycle& C, int i);

// Intersection of the component primes; the unit ideal for the zero cycle.
Ideal support(const Cycle& C);

// Components whose variety contains the rational point q.
Cycle through_point(const Cycle& C, const std::vector<Scalar>& q);

}  // namespace gapvogel

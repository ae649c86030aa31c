#pragma once

#include "gapvogel/groebner.hpp"

namespace gapvogel {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal intersect(const std::vector<Ideal>& ideals, const RingPtr& ring);

// I : J
Ideal quotient(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const Polynomial& g);
// I : g^inf and I : J^inf
Ideal saturate(const Ideal& I, const Polynomial& g);
Ideal saturate(const Ideal& I, const Ideal& J);
// The gap sheaf I minus V(W).
inline Ideal gap_sheaf(const Ideal& I, const Ideal& W) { return saturate(I, W); }

bool radical_member(const Polynomial& p, const Ideal& I);
// V(I) is contained in V(J), i.e. J lies in the radical of I.
bool variety_contained(const Ideal& I, const Ideal& J);
bool same_variety(const Ideal& I, const Ideal& J);

}  // namespace gapvogel

#pragma once

#include <optional>
#include <vector>

#include "gapvogel/vogel.hpp"

namespace gapvogel {

using Point = std::vector<Scalar>;

// The rational point of a zero-dimensional prime; NonRationalPoint otherwise.
Point point_of(const Ideal& q);

Ideal point_ideal(const RingPtr& ring, const Point& p);

// Germ of C at p: the components passing through p.
Cycle germ(const Cycle& C, const Point& p);

// Coefficient of [p] in a cycle.
long multiplicity_at(const Cycle& C, const Point& p);

// (C . V(h))_p for C purely 1-dimensional at p. nullopt when h vanishes on a component through p.
std::optional<long> local_intersection_number(const Cycle& C, const Polynomial& h, const Point& p);

struct GapRatio {
    std::size_t component;  // index into M's terms
    PrimeComponent eta;
    long against_f = 0;          // (eta . V(f_{k+1-d}))_p
    std::optional<long> against_g;  // (eta . V(g))_p; nullopt when eta lies in V(g)
    Scalar ratio;
};

struct GapRatioReport {
    Point point;
    std::vector<GapRatio> ratios;
    Scalar max_ratio;
};

GapRatioReport gap_ratios(const VogelTower& tower, const Polynomial& g, const Point& p);
GapRatioReport gap_ratios(const Tuple& f, const Polynomial& g, const Cycle& M, const Point& p, Rng& rng);

struct RestrictionReport {
    bool pi1_pure = false;         // Pi^1_f purely 1-dimensional at p
    bool pi1_proper = false;       // Pi^1_f properly meets V(g) at p
    bool sets_equal = false;       // V(h) = V(f, g) as germs at p
    bool part_i_consistent = false;
    bool preconditions = false;    // hypotheses of part ii
    bool dimension_drops = false;
    bool h_defined = false;
    bool pi_hat_identities = false;   // Pi^^i_h = Pi^^{i+1}_f . V(g), 1 <= i <= n
    bool delta_identities = false;    // Delta^i_h = Delta^{i+1}_f . V(g), 1 <= i <= n
    bool delta0_identity = false;     // Delta^0_h = Pi^^1_f . V(g) + Delta^1_f . V(g)
    bool holds() const {
        return part_i_consistent && (!preconditions ||
                                     (dimension_drops && h_defined && pi_hat_identities && delta_identities &&
                                      delta0_identity));
    }
};

// Restriction checks for h = (f_1, ..., f_n, g).
RestrictionReport restriction_check(const Tuple& f, const Polynomial& g, const Cycle& M, const Point& p, Rng& rng);

struct LivReport {
    Tuple h;
    long a = 1;
    unsigned j = 1;
    GapRatioReport ratios;
    bool j_at_least_max = false;
    bool j_above_max = false;
    bool sufficient_bound = false;  // j >= 1 + max_l (Delta^0_{f|V_l})_p
    bool g_proper = false;          // V(g) properly meets each Delta^i_f(M), i >= 1, at p
    bool sets_equal = false;        // |M| meet V(h) = |M| meet V(f, g) near p
    bool dimension_drops = false;
    bool h_defined = false;
    bool delta0_identity = false;
    bool higher_identities = false;
    bool pi_hat1_identity = false;  // (Delta^0_f)_p = (Pi^^1_f . V(f_0 + a g^j))_p
    bool min_inequality = false;
    Cycle delta0_h, delta0_predicted;
    bool hypotheses() const { return g_proper && j_above_max; }
    bool holds() const {
        return sets_equal && dimension_drops && h_defined && delta0_identity && higher_identities && pi_hat1_identity;
    }
};

Tuple liv_tuple(const Tuple& f, const Polynomial& g, long a, unsigned j);

LivReport liv_check(const Tuple& f, const Polynomial& g, const Cycle& M, const Point& p, long a, unsigned j,
                    Rng& rng);

struct ReverseRow {
    unsigned j;
    long delta0_h = 0;                // (Delta^0_{h(a,j)})_p
    std::optional<long> difference;   // against the previous row
    long pi_hat_term = 0;             // (Delta^0_h)_p - j (Delta^1_f . V(g))_p
    bool bound_certifies = false;     // j > pi_hat_term
    bool difference_matches = false;
    bool sets_equal = false;
};

struct ReverseEstimate {
    long delta1_dot_g = 0;   // (Delta^1_f . V(g))_p
    std::size_t c = 0;       // components of Pi^^1_f through p
    std::vector<ReverseRow> rows;
    std::optional<unsigned> certified_by_bound, certified_by_count, certified_from;
    std::optional<long> delta0_f;  // recovered (Delta^0_f)_p
};

ReverseEstimate liv_reverse_estimate(const Tuple& f, const Polynomial& g, const Cycle& M, const Point& p, long a,
                                     unsigned j_from, unsigned j_to, Rng& rng);

struct CylinderLevel {
    int i;
    Cycle lhs, rhs;
    bool equal;
};

struct CylinderReport {
    RingPtr ring;  // ring with the extra coordinate
    Tuple h;
    std::vector<CylinderLevel> levels;
    bool h_defined = false;
    bool holds() const;
};

// h = (t^j, f_1, ..., f_n, f_0 + a t^j) on C x X, compared at (0, p).
CylinderReport cylinder_check(const Tuple& f, const Cycle& M, const Point& p, long a, unsigned j, Rng& rng);

}  // namespace gapvogel

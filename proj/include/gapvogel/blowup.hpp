#pragma once

#include <optional>
#include <vector>

#include "gapvogel/vogel.hpp"

namespace gapvogel {

// Chart {w_j != 0} of the blow-up, realized in X x A^{k+1} with w_j = 1.
struct BlowupChart {
    int j;
    RingPtr ring;       // ambient variables followed by w0..wk
    Ideal total_ideal;  // <w_j - 1, f_i - w_i f_j> + P, saturated by f_j
    Cycle total;        // [Bl] on the chart
    Cycle exceptional;  // [Bl] . V(f_j)
};

// Ring used by all charts of a blow-up along a tuple of the given length.
RingPtr blowup_ring(const RingPtr& base, std::size_t tuple_len);

std::vector<BlowupChart> blowup_charts(const Tuple& f, const PrimeComponent& V, Rng& rng);

// Both chart ideals agree on the overlap {w_j w_l != 0}.
bool charts_compatible(const Tuple& f, const PrimeComponent& V, Rng& rng);

struct FlagCheck {
    int m;
    bool e_proper = true;
    bool bl_proper = true;
};

// Proper intersection with the flag P^m x {0} = {w_{m+1} = ... = w_k = 0}, near V(f).
std::vector<FlagCheck> proper_flag_check(const Tuple& f, const PrimeComponent& V, Rng& rng);

// Proper push-forward to X of a cycle on a chart, keeping only components first seen on that chart.
Cycle push_forward(const Cycle& C, const BlowupChart& chart, const RingPtr& base, Rng& rng);

struct SegreLevel {
    int i;
    int m;
    bool e_proper = true, bl_proper = true;
    Cycle pushed_bl, pushed_e, pi_hat, delta;
    bool pi_hat_equal = false, delta_equal = false;
};

struct SegreVogelReport {
    std::vector<SegreLevel> levels;
    bool hypothesis = true;  // E meets every flag properly
    bool holds() const;
};

SegreVogelReport segre_vogel_check(const Tuple& f, const Cycle& M, Rng& rng);

// Generic linear reorganization whose exceptional divisors meet every flag properly.
ReorganizeResult vogel_reorganization(const Tuple& f, const Cycle& M, Rng& rng, int max_retries = 32);

}  // namespace gapvogel

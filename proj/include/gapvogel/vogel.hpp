#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gapvogel/cycles.hpp"

namespace gapvogel {

using Tuple = std::vector<Polynomial>;

// Truncate to the last d entries, or prepend copies of f_0 up to length d.
Tuple normalize_tuple(const Tuple& f, int d);

enum class GapFlavor { Plain, Modified, Inductive };

// Gap scheme of f on the irreducible component V(P) of dimension d, as a saturated ideal
// containing P. Indices outside [d-(k+1), d] and the bottom index give the unit ideal.
Ideal gap_scheme(const Tuple& f, const Ideal& P, int d, int i, GapFlavor flavor);

// Flags are evaluated on components meeting V(f): the germ of the tower along V(f).
struct LevelFlags {
    bool pure_pi = true;           // |Pi^i| purely i-dimensional
    bool pi_eq_tilde = true;       // |Pi^i| = |Pi~^i|
    bool pi_eq_hat = true;         // |Pi^i| = |Pi^^i|
    bool pure_delta = true;        // Delta^i purely i-dimensional
    bool hat_cycle_agrees = true;  // cycle of the Pi^^i scheme equals the computed Pi^^i near V(f)
    bool all() const { return pure_pi && pi_eq_tilde && pi_eq_hat && pure_delta && hat_cycle_agrees; }
};

struct VogelLevel {
    int i;
    Cycle pi_hat;
    Cycle delta;
    Ideal pi_scheme;
    Ideal pi_tilde_scheme;
    Ideal pi_hat_scheme;
    LevelFlags flags;
};

struct ComponentTower {
    long mult;
    PrimeComponent component;
    int d;
    Tuple tuple;                     // tuple actually used (normalized unless disabled)
    std::vector<VogelLevel> levels;  // i = d downwards
    std::optional<std::string> improper;  // where the cycle recursion met an improper intersection

    int k() const { return static_cast<int>(tuple.size()) - 1; }
    const VogelLevel* level(int i) const;
    bool correct_dimension() const;
};

struct ReorganizeResult {
    Tuple tuple;
    std::vector<std::vector<long>> coefficients;  // row j gives f^_j as a combination of f
    int attempts = 0;
};

struct VogelTower {
    RingPtr ring;
    std::vector<ComponentTower> components;
    std::optional<ReorganizeResult> reorganization;
    std::uint64_t seed = 0;

    int top() const;
    int bottom() const;
    // M-weighted sums over components.
    Cycle pi_hat(int i) const;
    Cycle delta(int i) const;
    bool correct_dimension() const;
};

enum class TowerMode { Strict, AutoReorganize, Report };

struct TowerOptions {
    TowerMode mode = TowerMode::Strict;
    int max_retries = 32;
    bool normalize = true;
};

// [X] for the ambient affine space.
Cycle whole_space(const RingPtr& ring);

// Requires M non-zero with all multiplicities of one sign.
void require_valid_m(const Cycle& M);

ComponentTower component_tower(const Tuple& f, const PrimeComponent& V, long mult, Rng& rng, bool normalize = true);

// Strict: throws CorrectDimensionViolated on the first failing flag (top level first).
// AutoReorganize: on failure, reorganizes and recomputes. Report: never throws on flags.
VogelTower vogel_tower(const Tuple& f, const Cycle& M, Rng& rng, const TowerOptions& opt = {});

struct VogelSet {
    int i;
    std::vector<PrimeComponent> components;
    Ideal support;
};

// D^i(M) for every index that occurs, from the top down.
std::vector<VogelSet> vogel_sets(const Tuple& f, const Cycle& M);

struct DimensionReport {
    struct Level {
        int i;
        bool pure_pi, pi_eq_tilde, pi_eq_hat, pure_d;
    };
    struct Component {
        PrimeComponent component;
        std::vector<Level> levels;
    };
    std::vector<Component> components;
    bool i_holds = true, ii_holds = true, iii_holds = true, iv_holds = true;
    // i <=> ii <=> iii, and these imply iv.
    bool implications_hold() const;
};

DimensionReport check_dimensionality(const Tuple& f, const Cycle& M);

// Generic linear reorganization built entry by entry from the last one down, with
// a-posteriori verification; throws ReorganizationBudgetExhausted.
ReorganizeResult reorganize(const Tuple& f, const Cycle& M, Rng& rng, int max_retries = 32);

}  // namespace gapvogel

#pragma once

#include <string>
#include <vector>

#include "gapvogel/groebner.hpp"

namespace gapvogel {

// A prime ideal with its dimension; key is the canonical serialization of its basis.
struct PrimeComponent {
    Ideal prime;
    int dim = 0;
    std::string key;

    PrimeComponent(Ideal p, int d);
};

struct CycleTerm {
    long mult;
    PrimeComponent comp;
};

// Formal Z-combination of distinct prime components, kept sorted by
// (dimension descending, key) with no zero coefficients.
class Cycle {
public:
    explicit Cycle(RingPtr ring) : ring_(std::move(ring)) {}
    static Cycle of(const PrimeComponent& c, long mult = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<CycleTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const PrimeComponent& c, long mult);
    long multiplicity(const Ideal& prime) const;

    Cycle operator+(const Cycle& o) const;
    Cycle operator-(const Cycle& o) const;
    Cycle operator*(long k) const;
    Cycle& operator+=(const Cycle& o) { return *this = *this + o; }
    bool operator==(const Cycle& o) const;
    bool operator!=(const Cycle& o) const { return !(*this == o); }

    bool nonnegative() const;
    // Largest and smallest component dimensions; -1 for the zero cycle.
    int max_dim() const;
    int min_dim() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<CycleTerm> terms_;
};

}  // namespace gapvogel

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gapvogel/polynomial.hpp"

namespace gapvogel {

using Basis = std::vector<Polynomial>;

// Ideal given by generators, with a write-once cache of reduced Groebner bases per order.
class Ideal {
public:
    explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

    static Ideal unit(RingPtr ring) { return Ideal(ring, {Polynomial(ring, 1)}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    // Reduced basis: primitive integer coefficients, positive leading coefficient,
    // sorted by ascending leading monomial.
    const Basis& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

    bool is_unit() const;
    bool is_zero() const;
    bool contains(const Polynomial& p) const;
    bool contains(const Ideal& other) const;
    bool operator==(const Ideal& other) const;
    bool operator!=(const Ideal& other) const { return !(*this == other); }

    Ideal operator+(const Ideal& other) const;
    Ideal with(const Polynomial& p) const;
    Ideal with(const std::vector<Polynomial>& ps) const;
    Ideal in_ring(const RingPtr& target) const;

    // Canonical generators (reduced grevlex basis) as strings, and their joined key.
    std::vector<std::string> canonical_strings() const;
    std::string key() const;

private:
    struct Cache {
        std::mutex mu;
        std::map<MonomialOrder, std::shared_ptr<const Basis>> bases;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

Basis groebner_basis(const Ideal& I, const MonomialOrder& order);
Basis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& order);

// Remainder of full division by a Groebner basis for the given order.
Polynomial reduce(const Polynomial& p, const Basis& gb, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& p, const Ideal& I,
                       const MonomialOrder& order = MonomialOrder::grevlex());

// I intersected with the subring in the kept variables (stays in I's ring).
Ideal eliminate(const Ideal& I, VarMask keep);
Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep);

// Standard monomials of I for the order; nullopt when there are more than limit.
std::optional<std::vector<Monomial>> standard_monomials(const Basis& gb, const MonomialOrder& order,
                                                        std::size_t nvars, std::size_t limit = 100000);

// dim_Q of R/I, or nullopt if I is not zero-dimensional.
std::optional<std::size_t> quotient_dimension(const Ideal& I);

VarMask all_vars(std::size_t nvars);

}  // namespace gapvogel

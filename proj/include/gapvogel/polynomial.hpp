#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gapvogel/monomial.hpp"
#include "gapvogel/ring.hpp"

namespace gapvogel {

// Exact rational; mpq_class keeps values canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

Scalar parse_scalar(const std::string& text);
std::string scalar_to_string(const Scalar& s);

struct Term {
    Monomial m;
    Scalar c;
};

// Sparse polynomial over Q. Terms are kept sorted by descending grevlex with no zero
// coefficients, so structural equality is polynomial equality.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring);
    Polynomial(RingPtr ring, const Scalar& c);

    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c = 1);
    // Sorts and merges arbitrary terms.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    Scalar constant_coefficient() const;
    Scalar coefficient(const Monomial& m) const;
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    VarMask support() const;

    Term leading_term(const MonomialOrder& order) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& s) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial mul_term(const Monomial& m, const Scalar& c) const;
    Polynomial pow(unsigned e) const;

    // Replace variable i by the given value.
    Polynomial substitute(std::size_t var, const Scalar& value) const;
    // Replace each variable i by images[i]; images live in a common target ring.
    Polynomial compose(const std::vector<Polynomial>& images) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;
    // p(x + shift).
    Polynomial translate(const std::vector<Scalar>& shift) const;
    Polynomial derivative(std::size_t var) const;

    // Same exponents, different ring; throws if a used variable does not exist there.
    Polynomial in_ring(const RingPtr& target) const;

    // Scalar multiple with integer coprime coefficients and positive grevlex leading coefficient.
    Polynomial primitive() const;
    Polynomial monic(const MonomialOrder& order) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Total order used for canonical sorting: grevlex on terms, then coefficients.
int compare(const Polynomial& a, const Polynomial& b);

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// Exact division; returns false if b does not divide a.
bool divide_exact(const Polynomial& a, const Polynomial& b, Polynomial* quotient);

}  // namespace gapvogel

#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace gapvogel {

constexpr std::size_t kMaxVars = 32;
using VarMask = std::uint32_t;

class Monomial {
public:
    Monomial() = default;

    static Monomial variable(std::size_t i, unsigned exponent = 1);

    unsigned operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, unsigned exponent);
    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    VarMask support() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;
    // True when the two monomials share no variable.
    bool coprime(const Monomial& other) const;

    // Zero the exponents of variables outside keep.
    Monomial restricted(VarMask keep) const;
    unsigned degree_in(VarMask vars) const;

    bool operator==(const Monomial& other) const { return e_ == other.e_; }
    bool operator!=(const Monomial& other) const { return e_ != other.e_; }
    std::size_t hash() const;

private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint32_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    // Elimination order: variables in first_block dominate, grevlex inside each block.
    static MonomialOrder block(VarMask first_block) { return MonomialOrder(Kind::Block, first_block); }

    Kind kind() const { return kind_; }
    VarMask first_block() const { return mask_; }

    // Sign of a - b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && mask_ == o.mask_; }
    bool operator<(const MonomialOrder& o) const {
        return kind_ != o.kind_ ? kind_ < o.kind_ : mask_ < o.mask_;
    }
    std::string name() const;

private:
    MonomialOrder(Kind kind, VarMask mask) : kind_(kind), mask_(mask) {}
    Kind kind_;
    VarMask mask_;
};

inline VarMask var_bit(std::size_t i) { return VarMask(1) << i; }

}  // namespace gapvogel

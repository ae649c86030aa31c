#include "gapvogel/monomial.hpp"

#include <algorithm>

#include "gapvogel/errors.hpp"

namespace gapvogel {

namespace {

constexpr unsigned kMaxExponent = 0xFFFF;

[[noreturn]] void overflow() {
    throw Error(ErrorCode::InvalidInput, "exponent overflow");
}

}  // namespace

Monomial Monomial::variable(std::size_t i, unsigned exponent) {
    Monomial m;
    m.set(i, exponent);
    return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
    if (exponent > kMaxExponent) overflow();
    deg_ = deg_ - e_[i] + exponent;
    e_[i] = static_cast<std::uint16_t>(exponent);
}

VarMask Monomial::support() const {
    VarMask s = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (e_[i]) s |= var_bit(i);
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned v = unsigned(e_[i]) + other.e_[i];
        if (v > kMaxExponent) overflow();
        r.e_[i] = static_cast<std::uint16_t>(v);
    }
    r.deg_ = deg_ + other.deg_;
    return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - divisor.e_[i]);
    r.deg_ = deg_ - divisor.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.e_[i] = std::max(e_[i], other.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.e_[i] = std::min(e_[i], other.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (e_[i] && other.e_[i]) return false;
    return true;
}

Monomial Monomial::restricted(VarMask keep) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (keep & var_bit(i)) {
            r.e_[i] = e_[i];
            r.deg_ += e_[i];
        }
    return r;
}

unsigned Monomial::degree_in(VarMask vars) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (vars & var_bit(i)) d += e_[i];
    return d;
}

std::size_t Monomial::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        h ^= e_[i];
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

namespace {

int revlex_tail(const Monomial& a, const Monomial& b, VarMask vars) {
    for (std::size_t k = kMaxVars; k-- > 0;) {
        if (!(vars & var_bit(k))) continue;
        if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    }
    return 0;
}

int grevlex_on(const Monomial& a, const Monomial& b, VarMask vars) {
    unsigned da = a.degree_in(vars), db = b.degree_in(vars);
    if (da != db) return da > db ? 1 : -1;
    return revlex_tail(a, b, vars);
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex:
            for (std::size_t i = 0; i < kMaxVars; ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        case Kind::Grevlex:
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            return revlex_tail(a, b, ~VarMask(0));
        case Kind::Block: {
            int c = grevlex_on(a, b, mask_);
            if (c) return c;
            return grevlex_on(a, b, ~mask_);
        }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::Grevlex: return "grevlex";
        case Kind::Block: return "block:" + std::to_string(mask_);
    }
    return "?";
}

}  // namespace gapvogel

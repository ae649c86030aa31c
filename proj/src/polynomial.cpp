#include "gapvogel/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "gapvogel/errors.hpp"

namespace gapvogel {

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

bool term_greater(const Term& a, const Term& b) { return kCanonical.greater(a.m, b.m); }

// Sort descending and merge equal monomials.
void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), term_greater);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Term t = std::move(terms[i]);
        std::size_t j = i + 1;
        for (; j < terms.size() && terms[j].m == t.m; ++j) t.c += terms[j].c;
        if (sgn(t.c) != 0) terms[out++] = std::move(t);
        i = j;
    }
    terms.resize(out);
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    Scalar s;
    if (s.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, "invalid rational '" + text + "'");
    if (s.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    s.canonicalize();
    return s;
}

std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, const Scalar& c) : ring_(std::move(ring)) {
    if (sgn(c) != 0) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
    return monomial(std::move(ring), Monomial::variable(i), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
    Polynomial p(std::move(ring));
    if (sgn(c) != 0) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

Scalar Polynomial::constant_coefficient() const {
    if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
    return 0;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.m == m) return t.c;
    return 0;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().m.degree(); }

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.m[var]);
    return d;
}

VarMask Polynomial::support() const {
    VarMask s = 0;
    for (const Term& t : terms_) s |= t.m.support();
    return s;
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of the zero polynomial");
    if (order == kCanonical) return terms_.front();
    const Term* best = &terms_.front();
    for (const Term& t : terms_)
        if (order.greater(t.m, best->m)) best = &t;
    return *best;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : kCanonical.compare(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].c + o.terms_[j].c;
            if (sgn(s) != 0) r.terms_.push_back({terms_[i].m, s});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) prod.push_back({a.m * b.m, a.c * b.c});
    return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::operator*(const Scalar& s) const {
    if (sgn(s) == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.c *= s;
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
    if (sgn(c) == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::substitute(std::size_t var, const Scalar& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term u{t.m, t.c};
        unsigned e = t.m[var];
        if (e) {
            mpq_class pw;
            mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
            mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
            u.c *= pw;
            u.m.set(var, 0);
        }
        out.push_back(std::move(u));
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (images.size() < ring_->nvars()) throw Error(ErrorCode::InvalidInput, "compose: too few images");
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    std::vector<std::vector<Polynomial>> powers(ring_->nvars());
    Polynomial result(target);
    for (const Term& t : terms_) {
        Polynomial acc(target, t.c);
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            unsigned e = t.m[i];
            if (!e) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Polynomial(target, 1));
            while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
            acc = acc * pw[e];
        }
        result += acc;
    }
    return result;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    Scalar total = 0;
    for (const Term& t : terms_) {
        Scalar v = t.c;
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            unsigned e = t.m[i];
            if (!e) continue;
            mpq_class pw;
            mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
            mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
            v *= pw;
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::translate(const std::vector<Scalar>& shift) const {
    bool trivial = true;
    for (const Scalar& s : shift) trivial = trivial && sgn(s) == 0;
    if (trivial) return *this;
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) images.push_back(variable(ring_, i) + Polynomial(ring_, shift[i]));
    return compose(images);
}

Polynomial Polynomial::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        unsigned e = t.m[var];
        if (!e) continue;
        Term u{t.m, t.c * e};
        u.m.set(var, e - 1);
        out.push_back(std::move(u));
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
    if (target == ring_) return *this;
    VarMask allowed = target->nvars() >= kMaxVars ? ~VarMask(0) : (var_bit(target->nvars()) - 1);
    if (support() & ~allowed) throw Error(ErrorCode::ContextMismatch, "polynomial uses variables missing from the target ring");
    Polynomial r(target);
    r.terms_ = terms_;
    return r;
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Term& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Scalar factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (sgn(terms_.front().c) < 0) factor = -factor;
    return *this * factor;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    Scalar lc = leading_term(order).c;
    return *this * Scalar(1 / lc);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

int compare(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Term& s = a.terms()[i];
        const Term& t = b.terms()[i];
        int c = kCanonical.compare(s.m, t.m);
        if (c) return c;
        int d = cmp(s.c, t.c);
        if (d) return d > 0 ? 1 : -1;
    }
    if (a.size() != b.size()) return a.size() > b.size() ? 1 : -1;
    return 0;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        Scalar mag = abs(t.c);
        bool negative = sgn(t.c) < 0;
        if (negative) out += "-";
        else if (!first) out += "+";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            unsigned e = t.m[i];
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) out += mag.get_str();
        else if (mag == 1) out += mono;
        else out += mag.get_str() + "*" + mono;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    Polynomial expr() {
        Polynomial acc(ring_);
        bool first = true;
        for (;;) {
            bool negate = false;
            if (peek('+') || peek('-')) {
                negate = s_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            Polynomial t = term();
            acc = negate ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = power();
        while (peek('*')) {
            ++pos_;
            acc = acc * power();
        }
        skip();
        if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '('))
            fail("implicit multiplication is not allowed");
        return acc;
    }

    Polynomial power() {
        Polynomial base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            std::string digits = read_digits();
            if (digits.empty()) fail("expected a non-negative integer exponent");
            if (digits.size() > 9) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Polynomial primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == '-' || c == '+') {
            ++pos_;
            Polynomial p = power();
            return c == '-' ? -p : p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            mpz_class n(num);
            mpz_class d = 1;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                std::string den = read_digits();
                if (den.empty()) fail("expected denominator");
                d = mpz_class(den);
                if (d == 0) fail("zero denominator");
            }
            Scalar q(n, d);
            q.canonicalize();
            return Polynomial(ring_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto idx = ring_->index_of(name);
            if (!idx) {
                pos_ = start;
                throw Error(ErrorCode::UnknownVariable,
                            "unknown variable '" + name + "' at position " + std::to_string(start));
            }
            return Polynomial::variable(ring_, *idx);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) { return Parser(text, ring).parse(); }

bool divide_exact(const Polynomial& a, const Polynomial& b, Polynomial* quotient) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    for (std::size_t i = 0; i < a.ring()->nvars(); ++i)
        if (b.degree_in(i) > a.degree_in(i) && !a.is_zero()) return false;
    const Term lt = b.terms().front();
    const Scalar inv = 1 / lt.c;
    Polynomial rem = a;
    std::vector<Term> q;
    while (!rem.is_zero()) {
        const Term& t = rem.terms().front();
        if (!lt.m.divides(t.m)) return false;
        Term qt{t.m / lt.m, t.c * inv};
        rem = rem - b.mul_term(qt.m, qt.c);
        q.push_back(std::move(qt));
    }
    if (quotient) *quotient = Polynomial::from_terms(a.ring(), std::move(q));
    return true;
}

}  // namespace gapvogel

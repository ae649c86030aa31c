#include "gapvogel/cycle.hpp"

#include <algorithm>
#include <sstream>

namespace gapvogel {

PrimeComponent::PrimeComponent(Ideal p, int d) : prime(std::move(p)), dim(d), key(prime.key()) {}

namespace {

bool term_before(const PrimeComponent& a, const PrimeComponent& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.key < b.key;
}

}  // namespace

Cycle Cycle::of(const PrimeComponent& c, long mult) {
    Cycle z(c.prime.ring());
    z.add(c, mult);
    return z;
}

void Cycle::add(const PrimeComponent& c, long mult) {
    require_same_ring(ring_, c.prime.ring());
    if (mult == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), c,
                               [](const CycleTerm& t, const PrimeComponent& x) { return term_before(t.comp, x); });
    if (it != terms_.end() && it->comp.key == c.key) {
        it->mult += mult;
        if (it->mult == 0) terms_.erase(it);
        return;
    }
    terms_.insert(it, CycleTerm{mult, c});
}

long Cycle::multiplicity(const Ideal& prime) const {
    std::string k = prime.key();
    for (const CycleTerm& t : terms_)
        if (t.comp.key == k) return t.mult;
    return 0;
}

Cycle Cycle::operator+(const Cycle& o) const {
    require_same_ring(ring_, o.ring_);
    Cycle r = *this;
    for (const CycleTerm& t : o.terms_) r.add(t.comp, t.mult);
    return r;
}

Cycle Cycle::operator-(const Cycle& o) const { return *this + o * -1; }

Cycle Cycle::operator*(long k) const {
    Cycle r(ring_);
    if (k == 0) return r;
    r.terms_ = terms_;
    for (CycleTerm& t : r.terms_) t.mult *= k;
    return r;
}

bool Cycle::operator==(const Cycle& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mult != o.terms_[i].mult || terms_[i].comp.key != o.terms_[i].comp.key) return false;
    return true;
}

bool Cycle::nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const CycleTerm& t) { return t.mult > 0; });
}

int Cycle::max_dim() const { return terms_.empty() ? -1 : terms_.front().comp.dim; }
int Cycle::min_dim() const { return terms_.empty() ? -1 : terms_.back().comp.dim; }

std::string Cycle::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        if (terms_[i].mult != 1) os << terms_[i].mult << "*";
        os << "[V(";
        auto gens = terms_[i].comp.prime.canonical_strings();
        for (std::size_t k = 0; k < gens.size(); ++k) os << (k ? "," : "") << gens[k];
        os << ")]";
    }
    return os.str();
}

}  // namespace gapvogel

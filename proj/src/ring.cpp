#include "gapvogel/ring.hpp"

#include <algorithm>
#include <cctype>

#include "gapvogel/errors.hpp"
#include "gapvogel/monomial.hpp"

namespace gapvogel {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars)
        throw Error(ErrorCode::InvalidInput, "at most " + std::to_string(kMaxVars) + " variables are supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const std::string& n = names_[i];
        bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
        for (char ch : n) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
        if (!ok) throw Error(ErrorCode::InvalidInput, "invalid variable name '" + n + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == n) throw Error(ErrorCode::InvalidInput, "duplicate variable name '" + n + "'");
    }
}

RingPtr Ring::make(std::vector<std::string> names) {
    return std::make_shared<const Ring>(std::move(names));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

RingPtr Ring::extended(const std::vector<std::string>& hints) const {
    std::vector<std::string> names = names_;
    for (const std::string& hint : hints) {
        std::string candidate = hint;
        for (int k = 1; std::find(names.begin(), names.end(), candidate) != names.end(); ++k)
            candidate = hint + "_" + std::to_string(k);
        names.push_back(candidate);
    }
    return make(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw Error(ErrorCode::ContextMismatch, "polynomials live in different rings");
}

}  // namespace gapvogel

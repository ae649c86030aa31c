#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gapvogel {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Ordered list of variable names. Rings compare structurally by their names.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    static RingPtr make(std::vector<std::string> names);

    std::size_t nvars() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    // A ring whose first nvars() variables are ours, followed by fresh variables.
    // Each hint is used verbatim when unused, otherwise suffixed until unique.
    RingPtr extended(const std::vector<std::string>& hints) const;

    bool operator==(const Ring& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace gapvogel

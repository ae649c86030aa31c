#pragma once

#include <cstdint>
#include <random>

namespace gapvogel {

// Seeded generator with a platform-independent uniform integer draw
// (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return gen_(); }

    // Uniform on [lo, hi].
    long uniform(long lo, long hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t v;
        do v = gen_();
        while (v >= limit);
        return lo + static_cast<long>(v % range);
    }

    // Uniform on [-bound, bound] without zero.
    long nonzero(long bound) {
        long v = uniform(-bound, bound - 1);
        return v >= 0 ? v + 1 : v;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

constexpr long kSliceBound = 1000;

}  // namespace gapvogel

#pragma once

#include <cstdint>
#include <random>

namespace lincert {

/// Seeded PRNG with a platform-independent uniform draw.  mt19937_64 output
/// is pinned by the standard, and the rejection step below avoids modular
/// bias, so identical seeds replay identical challenge streams everywhere.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, bound), bound >= 1.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        // reject above the largest multiple of bound
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            std::uint64_t v = gen_();
            if (v < limit) return v % bound;
        }
    }

    /// Derives an independent child stream; used for per-trial seeds.
    RandomSource fork() { return RandomSource(next_u64() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 gen_;
};

}  // namespace lincert

#pragma once

#include <cstdint>

namespace projclose {

/// splitmix64; portable across platforms so seeded reports reproduce bit-exactly.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); modulo bias is irrelevant at our scales.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

} // namespace projclose

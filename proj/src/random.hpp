#pragma once

#include <cstdint>
#include <random>

namespace algnorm::detail {

// Uniform integer in [lo, hi] by rejection on the raw 64-bit stream, so the
// draw sequence depends only on the seed and not on the standard library's
// distribution implementation.
inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == UINT64_MAX) {
        return rng();
    }
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + x % range;
}

inline std::int64_t uniform_signed(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::uint64_t>(hi - lo)));
}

}  // namespace algnorm::detail

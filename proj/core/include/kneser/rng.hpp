#pragma once

#include <cstdint>
#include <random>

namespace kneser {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform integer in [lo, hi].
inline int rng_int(Rng& rng, int lo, int hi) {
    return int(std::uniform_int_distribution<long long>(lo, hi)(rng));
}

inline double rng_unit(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

} // namespace kneser

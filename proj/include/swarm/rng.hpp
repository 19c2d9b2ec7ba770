#pragma once

#include <cstdint>
#include <random>

namespace swarm {

// One generator per run; never shared across threads.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform integer in [0, n).
inline int uniform_index(Rng& rng, int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

/// Uniform integer in [0, n) excluding `skip`.
inline int uniform_index_excluding(Rng& rng, int n, int skip) {
    int k = std::uniform_int_distribution<int>(0, n - 2)(rng);
    return k >= skip ? k + 1 : k;
}

}  // namespace swarm

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vfw::rng {

// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
// Avoids std::uniform_real_distribution so that streams are fully determined
// by the engine state, independent of the standard library in use.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform01(gen);
}

/// Standard exponential variate (rate 1) via inversion.
inline double exponential(std::mt19937_64& gen) {
    return -std::log1p(-uniform01(gen));
}

/// Roughly standard-normal variate (Box-Muller, one value per call).
inline double normal(std::mt19937_64& gen) {
    double u1 = uniform01(gen);
    while (u1 <= 0.0) u1 = uniform01(gen);
    const double u2 = uniform01(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace vfw::rng

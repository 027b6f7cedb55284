#pragma once

// Seeded Gaussian draws with per-index substreams: splitmix64 supplies the
// uniforms, Box-Muller maps them to a normal deviate. Hashing (seed, index)
// into an independent substream makes the draw for hour k identical whether
// hours are processed serially or in parallel.

#include <cmath>
#include <cstdint>
#include <numbers>

namespace rampopt {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// uniform in (0, 1), never exactly 0 or 1
inline double uniform01(std::uint64_t& state) {
    return (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace detail

/// Gaussian(mean, std) draw number `index` of the stream identified by `seed`.
inline double gaussian_draw(std::uint64_t seed, std::uint64_t index, double mean,
                            double stddev) {
    if (stddev == 0.0) return mean;
    std::uint64_t state = seed;
    const std::uint64_t salt = detail::splitmix64(state);
    state = salt ^ (index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
    const double u1 = detail::uniform01(state);
    const double u2 = detail::uniform01(state);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rampopt

#pragma once

#include <cmath>
#include <cstdint>

#include "evac/vec2.hpp"

namespace evac::rng {

// Counter-based generator: every draw is a pure function of
// (seed, step, agent, tag), so trajectories are reproducible regardless of
// evaluation order and agents can be stepped in parallel.

enum Tag : std::uint64_t {
    kNoise = 1,      // Euler-Maruyama increment
    kLocalDir = 2,   // local-view random walk direction
    kInitX = 3,      // initial human position
    kInitY = 4,
    kInitTheta = 5,  // initial robot sign orientation
    kSweep = 6,      // per-run seed derivation in sweeps
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t step,
                         std::uint64_t agent, std::uint64_t tag) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ step);
    h = splitmix64(h ^ agent);
    h = splitmix64(h ^ tag);
    return h;
}

/// Uniform in [0, 1) from the top 53 bits.
inline double u01(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline double uniform(std::uint64_t seed, std::uint64_t step,
                      std::uint64_t agent, std::uint64_t tag) {
    return u01(mix(seed, step, agent, tag << 1));
}

/// Standard 2D normal via Box-Muller; consumes draw pair (tag*2, tag*2+1).
inline Vec2 gauss2(std::uint64_t seed, std::uint64_t step, std::uint64_t agent,
                   std::uint64_t tag) {
    double u1 = 1.0 - u01(mix(seed, step, agent, tag << 1));  // (0, 1]
    double u2 = u01(mix(seed, step, agent, (tag << 1) | 1));
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace evac::rng

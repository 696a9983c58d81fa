#pragma once

// Per-realization random streams: mt19937_64 seeded from splitmix64(seed ^ scrambled index).

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace logmax::mc {

inline constexpr std::uint64_t default_seed = 0x5eed2013ULL;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using Engine = std::mt19937_64;

/// Independent generator for realization (or chain) `index`.
inline Engine substream(std::uint64_t seed, std::uint64_t index) {
    return Engine(splitmix64(seed ^ splitmix64(index)));
}

/// LOGMAX_SEED if set, otherwise the default.
inline std::uint64_t seed_from_env(std::uint64_t fallback = default_seed) {
    const char* s = std::getenv("LOGMAX_SEED");
    if (!s || !*s) return fallback;
    return std::stoull(s, nullptr, 0);
}

/// Metropolis acceptance from a log-density ratio.
template <class Gen>
bool metropolis_accept(double log_ratio, Gen& gen) {
    if (log_ratio >= 0) return true;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::log(u(gen)) < log_ratio;
}

}  // namespace logmax::mc

#pragma once

#include <cmath>
#include <cstdint>

namespace firerisk {

// Identifier of the noise generator below, recorded in synthetic dataset
// metadata so fixtures can be reproduced bit-for-bit.
inline constexpr const char* kNoiseAlgorithmId = "splitmix64-boxmuller-v1";

// splitmix64 (Steele, Lea, Flood 2014). Small, seedable, and fully
// specified, which is what dataset reproducibility needs.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Standard normal deviates via Box-Muller over splitmix64 uniforms.
struct NormalSampler {
    SplitMix64 rng;
    double cached = 0.0;
    bool has_cached = false;

    explicit NormalSampler(std::uint64_t seed) : rng(seed) {}

    double next() {
        if (has_cached) {
            has_cached = false;
            return cached;
        }
        const double u1 = 1.0 - rng.uniform01();  // (0, 1], keeps log finite
        const double u2 = rng.uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cached = r * std::sin(a);
        has_cached = true;
        return r * std::cos(a);
    }
};

// Mixes stream coordinates into an independent sub-seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                              std::uint64_t c) {
    SplitMix64 s(seed ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xC2B2AE3D27D4EB4FULL) ^
                 (c * 0x165667B19E3779F9ULL));
    return s.next();
}

}  // namespace firerisk

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "bergtoep/common.hpp"

namespace bergtoep {

/// Derives a stream seed from (seed, index) with splitmix64 finalization.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

/// mt19937_64 with hand-rolled transforms. The engine output is pinned by the
/// standard; std distributions are not bit-reproducible across standard
/// libraries, so the transforms live here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in (0, 1].
    double uniform01() { return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * (uniform01() - 0x1.0p-53); }

    /// Standard complex normal (independent N(0,1) parts) via Box-Muller.
    Complex gaussian() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(th), r * std::sin(th)};
    }

    /// Unit-modulus complex number with uniform phase.
    Complex phase() {
        const double th = 2.0 * std::numbers::pi * uniform01();
        return {std::cos(th), std::sin(th)};
    }

private:
    std::mt19937_64 eng_;
};

} // namespace bergtoep

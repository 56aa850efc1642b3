#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "tlab/error.hpp"

namespace tlab {

/// Counter-based splittable stream built on the splitmix64 mixing function.
/// Sub-streams are derived by mixing the seed with a stream index, so the
/// values drawn for one ball are independent of how many draws any other
/// ball consumed. Deterministic across runs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Sub-stream derivation: mixes (seed, index) into a fresh seed.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t state = seed;
        const std::uint64_t mixed_seed = step(state);
        state = mixed_seed ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
        return SplitMix64(step(state));
    }

    std::uint64_t next_u64() { return step(state_); }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound); rejection sampling, bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw UsageError("next_below requires a positive bound");
        const std::uint64_t threshold = (0ULL - bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Standard normal via Box-Muller (one value per call, pair cached).
    double next_gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = next_double();
        const double u2 = next_double();
        if (u1 <= 0.0) u1 = std::numeric_limits<double>::min();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::acos(-1.0) * u2;
        cached_ = radius * std::sin(angle);
        has_cached_ = true;
        return radius * std::cos(angle);
    }

private:
    static std::uint64_t step(std::uint64_t& state) {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

} // namespace tlab

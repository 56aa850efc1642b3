#pragma once

#include <cstdint>
#include <string>

#include "tlab/geometry.hpp"

namespace tlab {

struct RadiusLaw {
    enum class Kind { Uniform, Constant };

    Kind kind = Kind::Constant;
    double lo = 1.0;
    double hi = 1.0;

    static RadiusLaw uniform(double lo, double hi); // 0 < lo <= hi
    static RadiusLaw constant(double r);            // r > 0

    /// "uniform:lo,hi" | "constant:r"
    static RadiusLaw parse(const std::string& text);
    std::string to_string() const;
};

struct GeneratorParams {
    int dimension = 2;
    int target_count = 1; // n >= 1
    std::uint64_t seed = 0;
    RadiusLaw radius_law = RadiusLaw{};
    int max_rejections = 10'000;
    double tolerance = 1e-9;

    void validate() const; // throws UsageError
};

struct PackingResult {
    Configuration configuration;
    bool stalled = false; // fewer than target_count balls placed
};

/// Seeded random tangent packing: ball 0 at the origin, then each ball is
/// placed tangent to a randomly chosen anchor along a random direction,
/// rejecting placements that overlap anything already placed. A ball whose
/// rejection budget runs out is skipped and the stalled flag is set.
/// Deterministic for fixed params; output is valid and connected by
/// construction.
PackingResult random_tangent_packing(const GeneratorParams& params);

} // namespace tlab

#include "tlab/packing_gen.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "tlab/rng.hpp"

namespace tlab {

RadiusLaw RadiusLaw::uniform(double lo, double hi) {
    if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
        throw UsageError("uniform radius law requires 0 < lo <= hi");
    }
    return {Kind::Uniform, lo, hi};
}

RadiusLaw RadiusLaw::constant(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw UsageError("constant radius law requires r > 0");
    return {Kind::Constant, r, r};
}

RadiusLaw RadiusLaw::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    try {
        if (kind == "constant") return constant(std::stod(args));
        if (kind == "uniform") {
            const auto comma = args.find(',');
            if (comma == std::string::npos) throw UsageError("uniform needs lo,hi");
            return uniform(std::stod(args.substr(0, comma)), std::stod(args.substr(comma + 1)));
        }
    } catch (const std::logic_error&) {
        // fall through to the common error
    }
    throw UsageError("radius law must be \"uniform:lo,hi\" or \"constant:r\": " + text);
}

std::string RadiusLaw::to_string() const {
    std::ostringstream out;
    out.precision(17);
    if (kind == Kind::Constant) {
        out << "constant:" << lo;
    } else {
        out << "uniform:" << lo << ',' << hi;
    }
    return out.str();
}

void GeneratorParams::validate() const {
    if (dimension < 1) throw UsageError("generator dimension must be >= 1");
    if (target_count < 1) throw UsageError("target ball count must be >= 1");
    if (max_rejections < 1) throw UsageError("max_rejections must be >= 1");
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
        throw UsageError("tolerance must be nonnegative and finite");
    }
    if (radius_law.kind == RadiusLaw::Kind::Uniform) {
        RadiusLaw::uniform(radius_law.lo, radius_law.hi);
    } else {
        RadiusLaw::constant(radius_law.lo);
    }
}

namespace {

double sample_radius(const RadiusLaw& law, SplitMix64& rng) {
    if (law.kind == RadiusLaw::Kind::Constant) return law.lo;
    return law.lo + (law.hi - law.lo) * rng.next_double();
}

std::vector<double> sample_unit_direction(int dimension, SplitMix64& rng) {
    std::vector<double> direction(static_cast<std::size_t>(dimension));
    for (;;) {
        double norm2 = 0.0;
        for (double& c : direction) {
            c = rng.next_gaussian();
            norm2 += c * c;
        }
        if (norm2 > 1e-12) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (double& c : direction) c *= inv;
            return direction;
        }
    }
}

} // namespace

PackingResult random_tangent_packing(const GeneratorParams& params) {
    params.validate();
    const TolerancePolicy policy = TolerancePolicy::approximate(params.tolerance);
    const int d = params.dimension;

    struct Placed {
        std::vector<double> center;
        double radius;
    };
    std::vector<Placed> placed;
    placed.reserve(static_cast<std::size_t>(params.target_count));

    {
        SplitMix64 rng = SplitMix64::substream(params.seed, 0);
        placed.push_back({std::vector<double>(static_cast<std::size_t>(d), 0.0),
                          sample_radius(params.radius_law, rng)});
    }

    const double eps = params.tolerance;
    bool stalled = false;
    for (int ball_index = 1; ball_index < params.target_count; ++ball_index) {
        SplitMix64 rng = SplitMix64::substream(params.seed, static_cast<std::uint64_t>(ball_index));
        bool accepted = false;
        for (int attempt = 0; attempt < params.max_rejections && !accepted; ++attempt) {
            const double radius = sample_radius(params.radius_law, rng);
            const Placed& anchor = placed[static_cast<std::size_t>(
                rng.next_below(static_cast<std::uint64_t>(placed.size())))];
            const std::vector<double> direction = sample_unit_direction(d, rng);

            std::vector<double> center(static_cast<std::size_t>(d));
            const double reach = anchor.radius + radius;
            for (int t = 0; t < d; ++t) {
                center[static_cast<std::size_t>(t)] =
                    anchor.center[static_cast<std::size_t>(t)] +
                    reach * direction[static_cast<std::size_t>(t)];
            }

            bool overlaps = false;
            for (const Placed& other : placed) {
                double dist2 = 0.0;
                for (int t = 0; t < d; ++t) {
                    const double delta =
                        center[static_cast<std::size_t>(t)] - other.center[static_cast<std::size_t>(t)];
                    dist2 += delta * delta;
                }
                const double sum = radius + other.radius;
                const double touch2 = sum * sum;
                // Overlap test mirroring classify_pair: inside the tangency
                // band counts as touching, not overlapping.
                if (dist2 < (1.0 - eps) * touch2 && std::abs(dist2 - touch2) > eps * touch2) {
                    overlaps = true;
                    break;
                }
            }
            if (!overlaps) {
                placed.push_back({std::move(center), radius});
                accepted = true;
            }
        }
        if (!accepted) stalled = true; // skip this ball, try the next index
    }

    std::vector<Ball> balls;
    balls.reserve(placed.size());
    for (Placed& p : placed) {
        balls.emplace_back(Point::f64(std::move(p.center)), Scalar::f64(p.radius));
    }
    return PackingResult{Configuration(d, std::move(balls), policy), stalled};
}

} // namespace tlab

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tlab/scalar.hpp"

namespace tlab {

/// A point in d-dimensional Euclidean space. All coordinates share one
/// scalar mode.
class Point {
public:
    explicit Point(std::vector<Scalar> coords);
    static Point f64(std::vector<double> coords);
    static Point rational(std::vector<Rational> coords);

    int dimension() const { return static_cast<int>(coords_.size()); }
    ScalarMode mode() const { return mode_; }
    const Scalar& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool operator==(const Point& other) const;

private:
    std::vector<Scalar> coords_;
    ScalarMode mode_;
};

/// Sum of squared coordinate differences; exact in rational mode.
Scalar squared_distance(const Point& p, const Point& q);

/// A closed ball: center plus strictly positive radius in the same scalar mode.
struct Ball {
    Ball(Point center_, Scalar radius_);

    Point center;
    Scalar radius;
};

/// Contact relation of two non-identical balls.
enum class ContactClass { Overlap, Tangent, Disjoint };

const char* to_string(ContactClass c);

/// How pairwise contacts are decided. Exact mode demands rational scalars and
/// uses strict trichotomy; Approximate mode compares squared distances with a
/// relative tolerance against (r_a + r_b)^2.
struct TolerancePolicy {
    enum class Mode { Exact, Approximate };

    Mode mode = Mode::Approximate;
    double rel_eps = 1e-9;

    static TolerancePolicy exact() { return {Mode::Exact, 0.0}; }
    static TolerancePolicy approximate(double rel_eps = 1e-9);
};

ContactClass classify_pair(const Ball& a, const Ball& b, const TolerancePolicy& policy);

using IndexPair = std::pair<int, int>;

/// A set of balls in fixed dimension with a tolerance policy. Construction
/// checks structural invariants (dimensions, positive radii, uniform scalar
/// mode, well-formed declared tangencies); freedom from overlaps is checked
/// separately by validate_configuration so that offending pairs can be
/// reported rather than thrown away.
class Configuration {
public:
    Configuration(int dimension, std::vector<Ball> balls, TolerancePolicy policy,
                  std::optional<std::vector<IndexPair>> declared_tangencies = std::nullopt);

    int dimension() const { return dimension_; }
    int size() const { return static_cast<int>(balls_.size()); }
    const std::vector<Ball>& balls() const { return balls_; }
    const Ball& ball(int i) const { return balls_[static_cast<std::size_t>(i)]; }
    const TolerancePolicy& policy() const { return policy_; }
    ScalarMode scalar_mode() const { return mode_; }
    const std::optional<std::vector<IndexPair>>& declared_tangencies() const {
        return declared_tangencies_;
    }

private:
    int dimension_;
    std::vector<Ball> balls_;
    TolerancePolicy policy_;
    std::optional<std::vector<IndexPair>> declared_tangencies_;
    ScalarMode mode_;
};

struct ValidationReport {
    int ball_count = 0;
    std::size_t pairs_checked = 0;
    std::size_t tangent_pairs = 0;
    std::vector<IndexPair> overlap_pairs;
    std::vector<IndexPair> failed_declared_tangencies;

    bool valid() const { return overlap_pairs.empty() && failed_declared_tangencies.empty(); }
};

/// Classifies every pair. A configuration is valid iff no pair overlaps and
/// every declared tangency really classifies as Tangent under the policy.
ValidationReport validate_configuration(const Configuration& cfg);

/// True iff the tangency graph has a single connected component
/// (empty configuration counts as connected).
bool is_connected(const Configuration& cfg);

} // namespace tlab

#include "tlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tlab {

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw UsageError("point must have dimension >= 1");
    mode_ = coords_.front().mode();
    for (const Scalar& c : coords_) {
        if (c.mode() != mode_) throw UsageError("mixed scalar modes in point");
    }
}

Point Point::f64(std::vector<double> coords) {
    std::vector<Scalar> s;
    s.reserve(coords.size());
    for (double c : coords) s.push_back(Scalar::f64(c));
    return Point(std::move(s));
}

Point Point::rational(std::vector<Rational> coords) {
    std::vector<Scalar> s;
    s.reserve(coords.size());
    for (Rational& c : coords) s.push_back(Scalar::rational(std::move(c)));
    return Point(std::move(s));
}

bool Point::operator==(const Point& other) const {
    if (dimension() != other.dimension() || mode_ != other.mode_) return false;
    for (int i = 0; i < dimension(); ++i) {
        if ((*this)[i] != other[i]) return false;
    }
    return true;
}

Scalar squared_distance(const Point& p, const Point& q) {
    if (p.dimension() != q.dimension()) throw UsageError("dimension mismatch");
    if (p.mode() != q.mode()) throw UsageError("scalar-mode mismatch");
    if (p.mode() == ScalarMode::F64) {
        double acc = 0.0;
        for (int i = 0; i < p.dimension(); ++i) {
            const double d = p[i].value_f64() - q[i].value_f64();
            acc += d * d;
        }
        return Scalar::f64(acc);
    }
    Rational acc = 0;
    for (int i = 0; i < p.dimension(); ++i) {
        const Rational d = p[i].rat() - q[i].rat();
        acc += d * d;
    }
    return Scalar::rational(std::move(acc));
}

Ball::Ball(Point center_, Scalar radius_)
    : center(std::move(center_)), radius(std::move(radius_)) {
    if (center.mode() != radius.mode()) throw UsageError("ball center/radius scalar-mode mismatch");
    const bool positive = radius.is_rational() ? radius.rat() > 0 : radius.value_f64() > 0.0;
    if (!positive) throw UsageError("ball radius must be strictly positive");
}

const char* to_string(ContactClass c) {
    switch (c) {
    case ContactClass::Overlap: return "overlap";
    case ContactClass::Tangent: return "tangent";
    case ContactClass::Disjoint: return "disjoint";
    }
    return "?";
}

TolerancePolicy TolerancePolicy::approximate(double rel_eps) {
    if (!(rel_eps >= 0.0) || !std::isfinite(rel_eps)) {
        throw UsageError("rel_eps must be a nonnegative finite number");
    }
    return {Mode::Approximate, rel_eps};
}

ContactClass classify_pair(const Ball& a, const Ball& b, const TolerancePolicy& policy) {
    if (a.center.dimension() != b.center.dimension()) throw UsageError("dimension mismatch");
    if (a.center.mode() != b.center.mode()) throw UsageError("scalar-mode mismatch");

    if (policy.mode == TolerancePolicy::Mode::Exact) {
        if (a.center.mode() != ScalarMode::Rational) {
            throw UsageError("exact tolerance policy requires rational scalars");
        }
        Rational dist2 = 0;
        for (int i = 0; i < a.center.dimension(); ++i) {
            const Rational d = a.center[i].rat() - b.center[i].rat();
            dist2 += d * d;
        }
        const Rational sum = a.radius.rat() + b.radius.rat();
        const Rational touch2 = sum * sum;
        if (dist2 < touch2) return ContactClass::Overlap;
        if (dist2 == touch2) return ContactClass::Tangent;
        return ContactClass::Disjoint;
    }

    if (a.center.mode() == ScalarMode::F64) {
        double dist2 = 0.0;
        for (int i = 0; i < a.center.dimension(); ++i) {
            const double d = a.center[i].value_f64() - b.center[i].value_f64();
            dist2 += d * d;
        }
        const double sum = a.radius.value_f64() + b.radius.value_f64();
        const double touch2 = sum * sum;
        const double eps = policy.rel_eps;
        if (std::abs(dist2 - touch2) <= eps * touch2) return ContactClass::Tangent;
        if (dist2 < (1.0 - eps) * touch2) return ContactClass::Overlap;
        return ContactClass::Disjoint;
    }

    // Approximate policy over rational scalars: same relative test, carried
    // out exactly with the tolerance converted to its exact binary value.
    const Rational eps(policy.rel_eps);
    Rational dist2 = 0;
    for (int i = 0; i < a.center.dimension(); ++i) {
        const Rational d = a.center[i].rat() - b.center[i].rat();
        dist2 += d * d;
    }
    const Rational sum = a.radius.rat() + b.radius.rat();
    const Rational touch2 = sum * sum;
    const Rational gap = dist2 - touch2;
    if (abs(gap) <= eps * touch2) return ContactClass::Tangent;
    if (dist2 < (1 - eps) * touch2) return ContactClass::Overlap;
    return ContactClass::Disjoint;
}

Configuration::Configuration(int dimension, std::vector<Ball> balls, TolerancePolicy policy,
                             std::optional<std::vector<IndexPair>> declared_tangencies)
    : dimension_(dimension),
      balls_(std::move(balls)),
      policy_(policy),
      declared_tangencies_(std::move(declared_tangencies)) {
    if (dimension_ < 1) throw UsageError("configuration dimension must be >= 1");

    mode_ = balls_.empty()
                ? (policy_.mode == TolerancePolicy::Mode::Exact ? ScalarMode::Rational
                                                                : ScalarMode::F64)
                : balls_.front().center.mode();
    for (const Ball& b : balls_) {
        if (b.center.dimension() != dimension_) {
            throw UsageError("ball center dimension does not match configuration dimension");
        }
        if (b.center.mode() != mode_) throw UsageError("mixed scalar modes in configuration");
    }
    if (policy_.mode == TolerancePolicy::Mode::Exact && mode_ != ScalarMode::Rational) {
        throw UsageError("exact tolerance policy requires rational scalars");
    }
    if (declared_tangencies_) {
        const int n = size();
        for (auto& [i, j] : *declared_tangencies_) {
            if (i < 0 || j < 0 || i >= n || j >= n || i >= j) {
                throw UsageError("declared tangency pair must satisfy 0 <= i < j < n");
            }
        }
        std::sort(declared_tangencies_->begin(), declared_tangencies_->end());
        declared_tangencies_->erase(
            std::unique(declared_tangencies_->begin(), declared_tangencies_->end()),
            declared_tangencies_->end());
    }
}

ValidationReport validate_configuration(const Configuration& cfg) {
    ValidationReport report;
    report.ball_count = cfg.size();
    const int n = cfg.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ++report.pairs_checked;
            switch (classify_pair(cfg.ball(i), cfg.ball(j), cfg.policy())) {
            case ContactClass::Overlap:
                report.overlap_pairs.emplace_back(i, j);
                break;
            case ContactClass::Tangent:
                ++report.tangent_pairs;
                break;
            case ContactClass::Disjoint:
                break;
            }
        }
    }
    if (cfg.declared_tangencies()) {
        for (const auto& [i, j] : *cfg.declared_tangencies()) {
            if (classify_pair(cfg.ball(i), cfg.ball(j), cfg.policy()) != ContactClass::Tangent) {
                report.failed_declared_tangencies.emplace_back(i, j);
            }
        }
    }
    return report;
}

bool is_connected(const Configuration& cfg) {
    const int n = cfg.size();
    if (n <= 1) return true;

    // union-find over the pair scan
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };

    int components = n;
    for (int i = 0; i < n && components > 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (classify_pair(cfg.ball(i), cfg.ball(j), cfg.policy()) == ContactClass::Tangent) {
                const int ri = find(i);
                const int rj = find(j);
                if (ri != rj) {
                    parent[static_cast<std::size_t>(ri)] = rj;
                    --components;
                }
            }
        }
    }
    return components == 1;
}

} // namespace tlab

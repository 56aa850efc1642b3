#include "tlab/apollonian.hpp"

#include <algorithm>
#include <cmath>

namespace tlab {

DescartesQuadruple::DescartesQuadruple(std::array<Rational, 4> curvatures_,
                                       std::array<std::array<Rational, 2>, 4> centers_)
    : curvatures(std::move(curvatures_)), centers(std::move(centers_)) {
    if (!identity_holds(curvatures)) {
        throw InvariantBreach("quadruple violates the Descartes identity");
    }
}

bool DescartesQuadruple::identity_holds(const std::array<Rational, 4>& k) {
    const Rational sum = k[0] + k[1] + k[2] + k[3];
    const Rational squares = k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + k[3] * k[3];
    return sum * sum == 2 * squares;
}

std::pair<Rational, Rational> descartes_fourth_curvature(const Rational& k1, const Rational& k2,
                                                         const Rational& k3) {
    const Rational disc = k1 * k2 + k2 * k3 + k3 * k1;
    if (disc < 0) throw UsageError("negative Descartes discriminant");
    const Rational root = exact_sqrt(disc); // throws when irrational
    const Rational sum = k1 + k2 + k3;
    return {sum + 2 * root, sum - 2 * root};
}

std::pair<double, double> descartes_fourth_curvature(double k1, double k2, double k3) {
    const double disc = k1 * k2 + k2 * k3 + k3 * k1;
    if (disc < 0.0) throw UsageError("negative Descartes discriminant");
    const double root = std::sqrt(disc);
    const double sum = k1 + k2 + k3;
    return {sum + 2.0 * root, sum - 2.0 * root};
}

namespace {

struct Circle {
    Rational curvature;              // > 0 for interiors, < 0 for the enclosing
    std::array<Rational, 2> product; // curvature * center

    std::array<Rational, 2> center() const {
        return {product[0] / curvature, product[1] / curvature};
    }
    Rational radius() const { return abs(Rational(1) / curvature); }
};

Rational squared_center_distance(const Circle& a, const Circle& b) {
    const auto ca = a.center();
    const auto cb = b.center();
    const Rational dx = ca[0] - cb[0];
    const Rational dy = ca[1] - cb[1];
    return dx * dx + dy * dy;
}

bool externally_tangent(const Circle& a, const Circle& b) {
    const Rational sum = a.radius() + b.radius();
    return squared_center_distance(a, b) == sum * sum;
}

// Canonical axis-aligned placement of the root quadruple: enclosing circle
// centered at the origin, second circle on the positive x-axis, third in the
// upper half plane. Exact throughout; throws UsageError when a square root
// is irrational (the root has no rational placement in this position).
std::array<Circle, 4> place_root(const std::array<Rational, 4>& k) {
    const Rational big_radius = -Rational(1) / k[0];
    const Rational r2 = Rational(1) / k[1];
    const Rational r3 = Rational(1) / k[2];
    const Rational r4 = Rational(1) / k[3];

    const Rational x2 = big_radius - r2;
    if (x2 <= 0) throw UsageError("root quadruple has a circle as large as the enclosing one");

    auto chord_x = [&](const Rational& r) {
        // x with |c| = R - r and |c - c2| = r2 + r
        const Rational inner = big_radius - r;
        const Rational touch = r2 + r;
        return (inner * inner - touch * touch + x2 * x2) / (2 * x2);
    };
    auto chord_y2 = [&](const Rational& r, const Rational& x) {
        const Rational inner = big_radius - r;
        return inner * inner - x * x;
    };

    const Rational x3 = chord_x(r3);
    const Rational y3_sq = chord_y2(r3, x3);
    if (y3_sq < 0) throw UsageError("root quadruple is not geometrically realizable");
    const Rational y3 = exact_sqrt(y3_sq);

    const Rational x4 = chord_x(r4);
    const Rational y4_sq = chord_y2(r4, x4);
    if (y4_sq < 0) throw UsageError("root quadruple is not geometrically realizable");
    const Rational y4 = exact_sqrt(y4_sq);

    Circle c1{k[0], {Rational(0), Rational(0)}};
    Circle c2{k[1], {k[1] * x2, Rational(0)}};
    Circle c3{k[2], {k[2] * x3, k[2] * y3}};
    Circle c4_plus{k[3], {k[3] * x4, k[3] * y4}};
    Circle c4_minus{k[3], {k[3] * x4, k[3] * -y4}};

    if (externally_tangent(c3, c4_plus)) return {c1, c2, c3, c4_plus};
    if (externally_tangent(c3, c4_minus)) return {c1, c2, c3, c4_minus};
    throw UsageError("root quadruple does not close up into four mutually tangent circles");
}

} // namespace

GasketResult apollonian_gasket(const std::array<std::int64_t, 4>& root_curvatures, int depth) {
    if (depth < 0) throw UsageError("gasket depth must be >= 0");
    if (depth > 12) throw UsageError("gasket depth > 12 is past desk scale; refusing");

    std::array<Rational, 4> root;
    int non_positive = 0;
    std::size_t enclosing_pos = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        root[i] = Rational(root_curvatures[i]);
        if (root[i] <= 0) {
            ++non_positive;
            enclosing_pos = i;
        }
    }
    if (non_positive != 1) {
        throw UsageError("root quadruple needs exactly one non-positive curvature");
    }
    if (root[enclosing_pos] == 0) {
        throw UsageError("zero curvature means a half-plane, not an enclosing circle");
    }
    std::rotate(root.begin(), root.begin() + static_cast<std::ptrdiff_t>(enclosing_pos),
                root.end());
    if (!DescartesQuadruple::identity_holds(root)) {
        throw UsageError("root quadruple violates the Descartes identity");
    }

    std::vector<Circle> circles(4);
    {
        const auto placed = place_root(root);
        std::copy(placed.begin(), placed.end(), circles.begin());
    }

    std::vector<DescartesQuadruple> quadruples;
    auto record_quadruple = [&](const std::array<int, 4>& ids) {
        std::array<Rational, 4> ks;
        std::array<std::array<Rational, 2>, 4> cs;
        for (std::size_t i = 0; i < 4; ++i) {
            ks[i] = circles[static_cast<std::size_t>(ids[i])].curvature;
            cs[i] = circles[static_cast<std::size_t>(ids[i])].center();
        }
        quadruples.emplace_back(std::move(ks), std::move(cs));
    };

    // ball index = circle id - 1 (circle 0 is the enclosing one)
    std::vector<IndexPair> tangencies = {{0, 1}, {0, 2}, {1, 2}};

    struct Frontier {
        std::array<int, 4> ids;
        int replaced; // -1 for the root: reflect all four positions
    };
    std::vector<Frontier> frontier = {{{0, 1, 2, 3}, -1}};
    record_quadruple(frontier.front().ids);

    for (int level = 1; level <= depth; ++level) {
        std::vector<Frontier> next;
        next.reserve(frontier.size() * 3);
        for (const Frontier& f : frontier) {
            for (int p = 0; p < 4; ++p) {
                if (p == f.replaced) continue; // would regenerate the parent

                Rational curvature_sum = 0;
                std::array<Rational, 2> product_sum = {Rational(0), Rational(0)};
                for (int q = 0; q < 4; ++q) {
                    if (q == p) continue;
                    const Circle& c = circles[static_cast<std::size_t>(f.ids[static_cast<std::size_t>(q)])];
                    curvature_sum += c.curvature;
                    product_sum[0] += c.product[0];
                    product_sum[1] += c.product[1];
                }
                const Circle& old = circles[static_cast<std::size_t>(f.ids[static_cast<std::size_t>(p)])];
                Circle fresh;
                fresh.curvature = 2 * curvature_sum - old.curvature;
                fresh.product = {2 * product_sum[0] - old.product[0],
                                 2 * product_sum[1] - old.product[1]};
                if (fresh.curvature <= 0) {
                    throw InvariantBreach("reflected circle escaped the enclosing circle");
                }
                const int fresh_id = static_cast<int>(circles.size());
                circles.push_back(std::move(fresh));

                for (int q = 0; q < 4; ++q) {
                    if (q == p) continue;
                    const int other = f.ids[static_cast<std::size_t>(q)];
                    if (other == 0) continue; // contact with the enclosing circle: not an edge
                    tangencies.emplace_back(other - 1, fresh_id - 1);
                }

                Frontier child = f;
                child.ids[static_cast<std::size_t>(p)] = fresh_id;
                child.replaced = p;
                record_quadruple(child.ids);
                next.push_back(child);
            }
        }
        frontier = std::move(next);
    }

    std::vector<Ball> balls;
    balls.reserve(circles.size() - 1);
    for (std::size_t id = 1; id < circles.size(); ++id) {
        const auto center = circles[id].center();
        balls.emplace_back(Point::rational({center[0], center[1]}),
                           Scalar::rational(circles[id].radius()));
    }

    Configuration configuration(2, std::move(balls), TolerancePolicy::exact(),
                                std::move(tangencies));
    Ball enclosing(Point::rational({Rational(0), Rational(0)}),
                   Scalar::rational(-Rational(1) / root[0]));
    return GasketResult{std::move(configuration), std::move(enclosing), root[0],
                        std::move(quadruples)};
}

} // namespace tlab

#include <doctest.h>

#include <algorithm>

#include "tlab/constructions.hpp"
#include "tlab/geometry.hpp"
#include "tlab/rng.hpp"

using namespace tlab;

namespace {

Ball unit_ball_f64(std::vector<double> center) {
    return Ball(Point::f64(std::move(center)), Scalar::f64(1.0));
}

Ball rational_ball(std::vector<Rational> center, Rational radius) {
    return Ball(Point::rational(std::move(center)), Scalar::rational(std::move(radius)));
}

} // namespace

TEST_CASE("classify_pair trivial distances") {
    const TolerancePolicy policy = TolerancePolicy::approximate();
    CHECK(classify_pair(unit_ball_f64({0, 0}), unit_ball_f64({2, 0}), policy) ==
          ContactClass::Tangent);
    CHECK(classify_pair(unit_ball_f64({0, 0}), unit_ball_f64({1, 0}), policy) ==
          ContactClass::Overlap);
    CHECK(classify_pair(unit_ball_f64({0, 0}), unit_ball_f64({3, 0}), policy) ==
          ContactClass::Disjoint);
}

TEST_CASE("classify_pair tolerance band") {
    const TolerancePolicy policy = TolerancePolicy::approximate(1e-9);
    // squared distance off by ~1e-10 relative: still tangent
    const double wobble = 2.0 * (1.0 + 2.5e-11);
    CHECK(classify_pair(unit_ball_f64({0, 0}), unit_ball_f64({wobble, 0}), policy) ==
          ContactClass::Tangent);
    const double shrunk = 2.0 * (1.0 - 2.5e-11);
    CHECK(classify_pair(unit_ball_f64({0, 0}), unit_ball_f64({shrunk, 0}), policy) ==
          ContactClass::Tangent);
    // well past the band
    CHECK(classify_pair(unit_ball_f64({0, 0}), unit_ball_f64({2.0 * (1.0 + 1e-6), 0}), policy) ==
          ContactClass::Disjoint);
    CHECK(classify_pair(unit_ball_f64({0, 0}), unit_ball_f64({2.0 * (1.0 - 1e-6), 0}), policy) ==
          ContactClass::Overlap);
}

TEST_CASE("classify_pair exact trichotomy") {
    const TolerancePolicy exact = TolerancePolicy::exact();
    const auto ball = [](long long x_num, long long x_den, long long r_num, long long r_den) {
        return rational_ball({Rational(x_num, x_den), Rational(0)}, Rational(r_num, r_den));
    };
    CHECK(classify_pair(ball(0, 1, 1, 1), ball(2, 1, 1, 1), exact) == ContactClass::Tangent);
    // off by one part in 10^12 is still a strict non-contact in exact mode
    CHECK(classify_pair(ball(0, 1, 1, 1), ball(2'000'000'000'001, 1'000'000'000'000, 1, 1),
                        exact) == ContactClass::Disjoint);
    CHECK(classify_pair(ball(0, 1, 1, 1), ball(1'999'999'999'999, 1'000'000'000'000, 1, 1),
                        exact) == ContactClass::Overlap);
}

TEST_CASE("classify_pair rejects exact policy over f64 scalars") {
    CHECK_THROWS_AS(classify_pair(unit_ball_f64({0, 0}), unit_ball_f64({2, 0}),
                                  TolerancePolicy::exact()),
                    UsageError);
}

TEST_CASE("ball construction rejects nonpositive radius") {
    CHECK_THROWS_AS(Ball(Point::f64({0, 0}), Scalar::f64(0.0)), UsageError);
    CHECK_THROWS_AS(Ball(Point::f64({0, 0}), Scalar::f64(-1.0)), UsageError);
    CHECK_THROWS_AS(Ball(Point::rational({Rational(0)}), Scalar::rational(0)), UsageError);
}

TEST_CASE("validate_configuration") {
    SUBCASE("simplex_clique(3) is valid with 10 tangent pairs") {
        const ValidationReport report = validate_configuration(simplex_clique(3));
        CHECK(report.valid());
        CHECK(report.ball_count == 5);
        CHECK(report.pairs_checked == 10);
        CHECK(report.tangent_pairs == 10);
    }
    SUBCASE("two unit balls at distance 1 are invalid") {
        const Configuration cfg(2, {unit_ball_f64({0, 0}), unit_ball_f64({1, 0})},
                                TolerancePolicy::approximate());
        const ValidationReport report = validate_configuration(cfg);
        CHECK_FALSE(report.valid());
        CHECK(report.overlap_pairs == std::vector<IndexPair>{{0, 1}});
    }
    SUBCASE("empty configuration is valid") {
        const Configuration cfg(2, {}, TolerancePolicy::approximate());
        const ValidationReport report = validate_configuration(cfg);
        CHECK(report.valid());
        CHECK(report.pairs_checked == 0);
    }
    SUBCASE("declared tangency that fails is reported") {
        const Configuration cfg(2, {unit_ball_f64({0, 0}), unit_ball_f64({5, 0})},
                                TolerancePolicy::approximate(),
                                std::vector<IndexPair>{{0, 1}});
        const ValidationReport report = validate_configuration(cfg);
        CHECK_FALSE(report.valid());
        CHECK(report.failed_declared_tangencies == std::vector<IndexPair>{{0, 1}});
    }
}

TEST_CASE("configuration construction errors") {
    CHECK_THROWS_AS(Configuration(0, {}, TolerancePolicy::approximate()), UsageError);
    CHECK_THROWS_AS(Configuration(3, {unit_ball_f64({0, 0})}, TolerancePolicy::approximate()),
                    UsageError);
    CHECK_THROWS_AS(Configuration(2, {unit_ball_f64({0, 0})}, TolerancePolicy::exact()),
                    UsageError);
    CHECK_THROWS_AS(Configuration(2, {unit_ball_f64({0, 0}), unit_ball_f64({2, 0})},
                                  TolerancePolicy::approximate(),
                                  std::vector<IndexPair>{{1, 0}}),
                    UsageError);
    CHECK_THROWS_AS(Configuration(2, {unit_ball_f64({0, 0}), unit_ball_f64({2, 0})},
                                  TolerancePolicy::approximate(),
                                  std::vector<IndexPair>{{0, 2}}),
                    UsageError);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(Configuration(2, {unit_ball_f64({0, 0}), unit_ball_f64({2, 0})},
                                     TolerancePolicy::approximate())));
    CHECK_FALSE(is_connected(Configuration(2, {unit_ball_f64({0, 0}), unit_ball_f64({3, 0})},
                                           TolerancePolicy::approximate())));
    CHECK(is_connected(simplex_clique(2)));
    CHECK(is_connected(Configuration(2, {}, TolerancePolicy::approximate())));
    CHECK(is_connected(Configuration(2, {unit_ball_f64({0, 0})}, TolerancePolicy::approximate())));
}

TEST_CASE("classify_pair is symmetric") {
    SplitMix64 rng(20240811);
    const TolerancePolicy policy = TolerancePolicy::approximate();
    for (int trial = 0; trial < 200; ++trial) {
        const Ball a(Point::f64({4 * rng.next_double(), 4 * rng.next_double()}),
                     Scalar::f64(0.25 + rng.next_double()));
        const Ball b(Point::f64({4 * rng.next_double(), 4 * rng.next_double()}),
                     Scalar::f64(0.25 + rng.next_double()));
        CHECK(classify_pair(a, b, policy) == classify_pair(b, a, policy));
    }
}

TEST_CASE("exact-mode invariance under scaling, translation, axis permutation") {
    SplitMix64 rng(7);
    const TolerancePolicy exact = TolerancePolicy::exact();
    for (int trial = 0; trial < 100; ++trial) {
        const auto small_rational = [&rng] {
            return Rational(static_cast<long long>(rng.next_below(41)) - 20,
                            1 + static_cast<long long>(rng.next_below(6)));
        };
        const Rational radius_a(1 + static_cast<long long>(rng.next_below(5)),
                                1 + static_cast<long long>(rng.next_below(3)));
        const Rational radius_b(1 + static_cast<long long>(rng.next_below(5)),
                                1 + static_cast<long long>(rng.next_below(3)));
        const Rational ax = small_rational(), ay = small_rational();
        const Rational bx = small_rational(), by = small_rational();

        const Ball a = rational_ball({ax, ay}, radius_a);
        const Ball b = rational_ball({bx, by}, radius_b);
        const ContactClass base = classify_pair(a, b, exact);

        // positive rational scaling
        const Rational scale(1 + static_cast<long long>(rng.next_below(7)),
                             1 + static_cast<long long>(rng.next_below(7)));
        const Ball a_scaled = rational_ball({ax * scale, ay * scale}, radius_a * scale);
        const Ball b_scaled = rational_ball({bx * scale, by * scale}, radius_b * scale);
        CHECK(classify_pair(a_scaled, b_scaled, exact) == base);

        // translation
        const Rational tx = small_rational(), ty = small_rational();
        const Ball a_moved = rational_ball({ax + tx, ay + ty}, radius_a);
        const Ball b_moved = rational_ball({bx + tx, by + ty}, radius_b);
        CHECK(classify_pair(a_moved, b_moved, exact) == base);

        // axis swap
        const Ball a_swapped = rational_ball({ay, ax}, radius_a);
        const Ball b_swapped = rational_ball({by, bx}, radius_b);
        CHECK(classify_pair(a_swapped, b_swapped, exact) == base);
    }
}

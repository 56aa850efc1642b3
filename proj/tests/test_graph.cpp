#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "tlab/constructions.hpp"
#include "tlab/graph.hpp"
#include "tlab/packing_gen.hpp"
#include "tlab/rng.hpp"

using namespace tlab;

namespace {

Configuration two_balls_at(double distance) {
    return Configuration(2,
                         {Ball(Point::f64({0, 0}), Scalar::f64(1.0)),
                          Ball(Point::f64({distance, 0}), Scalar::f64(1.0))},
                         TolerancePolicy::approximate());
}

} // namespace

TEST_CASE("build_graph on the plane clique is K4") {
    const TangencyGraph g = build_graph(simplex_clique(2));
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("build_graph on two distant balls has no edges") {
    const TangencyGraph g = build_graph(two_balls_at(3.0));
    CHECK(g.n == 2);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("build_graph rejects overlapping configurations") {
    CHECK_THROWS_AS(build_graph(two_balls_at(1.0)), DomainViolation);
}

TEST_CASE("kissing_configuration(3) graph is an apex over the cuboctahedron") {
    const Configuration cfg = kissing_configuration(3);
    const TangencyGraph g = build_graph(cfg);
    REQUIRE(g.n == 13);
    CHECK(g.degree(0) == 12); // center touches all

    // independent count over the raw coordinates
    std::vector<std::vector<double>> centers;
    std::vector<double> radii;
    for (const Ball& b : cfg.balls()) {
        std::vector<double> c;
        for (int t = 0; t < 3; ++t) c.push_back(b.center[t].value_f64());
        centers.push_back(std::move(c));
        radii.push_back(b.radius.value_f64());
    }
    const auto expected = oracle::tangent_pairs_f64(centers, radii, 1e-9);
    CHECK(g.edges == expected);

    // the 12 outer balls induce a 4-regular graph with 24 edges
    std::size_t outer_edges = 0;
    for (const auto& [i, j] : g.edges) {
        if (i >= 1 && j >= 1) ++outer_edges;
    }
    CHECK(outer_edges == 24);
    for (int v = 1; v < 13; ++v) CHECK(g.degree(v) == 5); // 4 ring neighbours + center
}

TEST_CASE("build_graph is label-invariant up to relabelling") {
    const GeneratorParams params{3, 24, 99, RadiusLaw::uniform(0.5, 2.0), 10'000, 1e-9};
    const Configuration cfg = random_tangent_packing(params).configuration;
    const TangencyGraph g = build_graph(cfg);

    // reverse the ball order and map the edges back
    std::vector<Ball> reversed(cfg.balls().rbegin(), cfg.balls().rend());
    const int n = cfg.size();
    const Configuration flipped(cfg.dimension(), std::move(reversed), cfg.policy());
    const TangencyGraph h = build_graph(flipped);
    std::vector<IndexPair> mapped;
    for (auto [i, j] : h.edges) {
        int a = n - 1 - i;
        int b = n - 1 - j;
        if (a > b) std::swap(a, b);
        mapped.emplace_back(a, b);
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == g.edges);
}

TEST_CASE("decreasing_radius_order") {
    SUBCASE("radii (1,3,2) orders as (1,2,0)") {
        const Configuration cfg(1,
                                {Ball(Point::f64({0}), Scalar::f64(1.0)),
                                 Ball(Point::f64({10}), Scalar::f64(3.0)),
                                 Ball(Point::f64({20}), Scalar::f64(2.0))},
                                TolerancePolicy::approximate());
        const EliminationOrder order = decreasing_radius_order(cfg);
        CHECK(order.order == std::vector<int>{1, 2, 0});
    }
    SUBCASE("equal radii break ties by index") {
        const Configuration cfg(1,
                                {Ball(Point::f64({0}), Scalar::f64(1.0)),
                                 Ball(Point::f64({3}), Scalar::f64(1.0)),
                                 Ball(Point::f64({6}), Scalar::f64(1.0)),
                                 Ball(Point::f64({9}), Scalar::f64(1.0))},
                                TolerancePolicy::approximate());
        CHECK(decreasing_radius_order(cfg).order == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("the small middle ball of simplex_clique(3) comes last") {
        const EliminationOrder order = decreasing_radius_order(simplex_clique(3));
        CHECK(order.order.back() == 4);
    }
}

TEST_CASE("max_back_degree") {
    CHECK(max_back_degree(simplex_clique(3)) == 4); // last ball of K5 sees 4 earlier
    const Configuration single(3, {Ball(Point::f64({0, 0, 0}), Scalar::f64(1.0))},
                               TolerancePolicy::approximate());
    CHECK(max_back_degree(single) == 0);
}

TEST_CASE("back degrees sum to the edge count") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
        const GeneratorParams params{2, 40, seed, RadiusLaw::uniform(0.5, 2.0), 10'000, 1e-9};
        const Configuration cfg = random_tangent_packing(params).configuration;
        const TangencyGraph g = build_graph(cfg);
        const EliminationOrder order = decreasing_radius_order(g);
        const long long total =
            std::accumulate(order.back_degrees.begin(), order.back_degrees.end(), 0LL);
        CHECK(total == static_cast<long long>(g.edge_count()));
    }
}

TEST_CASE("greedy degeneracy bound holds on random packings") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const GeneratorParams flat{2, 60, seed, RadiusLaw::constant(1.0), 10'000, 1e-9};
        CHECK(max_back_degree(random_tangent_packing(flat).configuration) <= 6);

        const GeneratorParams spatial{3, 60, seed, RadiusLaw::uniform(0.5, 2.0), 10'000, 1e-9};
        CHECK(max_back_degree(random_tangent_packing(spatial).configuration) <= 12);
    }
}

TEST_CASE("low_degree_witness") {
    SUBCASE("K4 of discs: every degree is 3") {
        const Configuration cfg = simplex_clique(2);
        const int witness = low_degree_witness(cfg);
        CHECK(build_graph(cfg).degree(witness) == 3);
    }
    SUBCASE("hexagonal 7-disc flower returns a ring disc") {
        const Configuration cfg = kissing_configuration(2);
        const int witness = low_degree_witness(cfg);
        const TangencyGraph g = build_graph(cfg);
        CHECK(g.degree(0) == 6); // the center disc is saturated
        CHECK(witness != 0);
        CHECK(g.degree(witness) == 3); // center + two ring neighbours
    }
    SUBCASE("two tangent discs") {
        const Configuration cfg(2,
                                {Ball(Point::f64({0, 0}), Scalar::f64(1.0)),
                                 Ball(Point::f64({2, 0}), Scalar::f64(1.0))},
                                TolerancePolicy::approximate());
        const int witness = low_degree_witness(cfg);
        CHECK((witness == 0 || witness == 1));
        CHECK(build_graph(cfg).degree(witness) == 1);
    }
    SUBCASE("preconditions are enforced") {
        CHECK_THROWS_AS(low_degree_witness(kissing_configuration(3)), UsageError); // d = 3
        const Configuration single(2, {Ball(Point::f64({0, 0}), Scalar::f64(1.0))},
                                   TolerancePolicy::approximate());
        CHECK_THROWS_AS(low_degree_witness(single), UsageError);
        CHECK_THROWS_AS(low_degree_witness(two_balls_at(3.0)), UsageError); // disconnected
    }
    SUBCASE("witness exists on connected random planar packings") {
        for (std::uint64_t seed = 100; seed < 140; ++seed) {
            const GeneratorParams params{2, 30, seed, RadiusLaw::uniform(0.6, 1.8), 10'000, 1e-9};
            const PackingResult result = random_tangent_packing(params);
            REQUIRE(is_connected(result.configuration));
            const int witness = low_degree_witness(result.configuration);
            CHECK(build_graph(result.configuration).degree(witness) <= 5);
        }
    }
}

TEST_CASE("synthetic graphs via from_edges") {
    const TangencyGraph g = TangencyGraph::from_edges(4, {{3, 1}, {0, 1}, {1, 3}});
    CHECK(g.edges == std::vector<IndexPair>{{0, 1}, {1, 3}});
    CHECK(g.adjacent(1, 3));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS_AS(TangencyGraph::from_edges(2, {{0, 5}}), UsageError);
    CHECK_THROWS_AS(TangencyGraph::from_edges(2, {{1, 1}}), UsageError);
}

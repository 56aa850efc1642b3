#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "tlab/geometry.hpp"

namespace tlab {

/// Four mutually tangent circles: curvatures (negative for an enclosing
/// circle) with their centers. Construction verifies the Descartes identity
/// (k1+k2+k3+k4)^2 = 2(k1^2+k2^2+k3^2+k4^2) exactly.
struct DescartesQuadruple {
    std::array<Rational, 4> curvatures;
    std::array<std::array<Rational, 2>, 4> centers;

    DescartesQuadruple(std::array<Rational, 4> curvatures_,
                       std::array<std::array<Rational, 2>, 4> centers_);

    static bool identity_holds(const std::array<Rational, 4>& curvatures);
};

/// Solutions k4 = k1+k2+k3 +- 2*sqrt(k1k2 + k2k3 + k3k1) of the Descartes
/// identity, exact: throws UsageError on a negative discriminant or when the
/// square root is irrational.
std::pair<Rational, Rational> descartes_fourth_curvature(const Rational& k1, const Rational& k2,
                                                         const Rational& k3);

/// Same in binary64 for constructions involving irrational roots.
std::pair<double, double> descartes_fourth_curvature(double k1, double k2, double k3);

struct GasketResult {
    /// Interior circles only, exact rational coordinates, Exact policy,
    /// declared tangencies from the construction tree.
    Configuration configuration;
    /// The enclosing circle (negative curvature). Flagged out of the
    /// configuration: internal tangency to it is not a colouring constraint.
    Ball enclosing;
    Rational enclosing_curvature;
    /// Root quadruple plus every reflected quadruple, in generation order.
    std::vector<DescartesQuadruple> quadruples;
};

/// Apollonian gasket from an integral root quadruple with exactly one
/// negative curvature (the enclosing circle). Each level reflects every
/// boundary quadruple in its three non-parent circles
/// (k' = 2(ka+kb+kc) - kd, same linear form for curvature*center products).
/// The canonical axis-aligned placement of an integral root is always
/// rational: the Descartes discriminant k1k2+k2k3+k3k1 equals
/// ((k4-k1-k2-k3)/2)^2, a perfect square.
GasketResult apollonian_gasket(const std::array<std::int64_t, 4>& root_curvatures, int depth);

} // namespace tlab

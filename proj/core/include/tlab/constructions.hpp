#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlab/geometry.hpp"

namespace tlab {

/// d+1 unit balls at the vertices of a regular d-simplex with side 2
/// (centroid at the origin) plus one inscribed ball at the centroid with
/// radius sqrt(2d/(d+1)) - 1, tangent to all of them: d+2 mutually touching
/// balls. Requires d >= 2 (in one dimension the middle ball degenerates).
/// Approximate scalar mode; all C(d+2,2) tangencies declared.
Configuration simplex_clique(int dimension);

/// One central unit ball plus kappa(d) unit balls tangent to it, pairwise
/// non-overlapping. Realizations: d=1 centers +-2; d=2 hexagon; d=3 scaled
/// D3 minimal vectors (FCC, 12 centers); d=4 scaled D4 minimal vectors (24);
/// d=8 scaled E8 roots (240). Other dimensions are rejected.
Configuration kissing_configuration(int dimension);

/// Replaces every ball tangent to ball i by a ball of radius(i) tangent to
/// ball i at the same contact point; drops non-neighbours; keeps ball i.
/// Every neighbour must have radius >= radius(i). The claim that shrinking
/// preserves non-overlap is re-checked on the output.
Configuration shrink_to_index(const Configuration& cfg, int index);

/// The crude volume bound kappa(d) <= 3^d - 1 (kissing configurations of
/// unit balls fit in a concentric ball of radius 3).
BigInt volume_kissing_bound(int dimension);

/// Known kissing numbers: {1:2, 2:6, 3:12, 4:24, 8:240, 24:196560}.
const std::map<int, BigInt>& known_kissing_numbers();

/// One row of the bound-chain table d+2 <= chi(d) <= kappa(d)+1 <= 3^d.
struct BoundsRow {
    int dimension = 0;
    int lower = 0;                     // d+2 for d >= 2; 2 for d = 1
    std::optional<BigInt> kappa;       // known kissing number
    BigInt kappa_crude;                // 3^d - 1
    BigInt upper;                      // kappa+1 when known, else 3^d
    std::optional<int> chi_known;      // exact chi: d=1 -> 2, d=2 -> 4
    std::optional<BigInt> magic_upper; // kappa(d) for d in {1,2,8,24}
};

BoundsRow bounds_for_dimension(int dimension); // d >= 1

std::vector<BoundsRow> bounds_table(int d_min, int d_max);

/// Aligned text table, one row per dimension.
std::string bounds_table_text(const std::vector<BoundsRow>& rows);

/// JSON array of row objects. Values that exceed the 2^53 JSON-safe integer
/// range are emitted as decimal strings.
std::string bounds_table_json(const std::vector<BoundsRow>& rows);

} // namespace tlab

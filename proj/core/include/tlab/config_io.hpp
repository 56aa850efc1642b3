#pragma once

#include <string>
#include <string_view>

#include "tlab/geometry.hpp"

namespace tlab {

/// Interchange JSON for configurations:
///   {"dimension": d, "scalar": "rational"|"f64", "tolerance": number?,
///    "balls": [{"center": [s, ...], "radius": s}, ...],
///    "declared_tangencies": [[i, j], ...]?}
/// where s is a JSON number in f64 mode and a "p/q" string in rational mode.
/// Indices are 0-based, pairs sorted i < j. "tolerance" is the relative
/// epsilon of an Approximate policy; an absent tolerance means Exact for
/// rational scalars and the default 1e-9 for f64.
///
/// indent < 0 emits compact canonical JSON (sorted keys, no whitespace);
/// that form is the digest input.
std::string configuration_to_json(const Configuration& cfg, int indent = -1);

Configuration configuration_from_json(const std::string& text); // throws UsageError

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/// "sha256:<hex>" over the compact canonical JSON form.
std::string configuration_digest(const Configuration& cfg);

} // namespace tlab

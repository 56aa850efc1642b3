#pragma once

#include <string>
#include <vector>

#include "tlab/graph.hpp"

namespace tlab {

/// Colour indices are dense and 0-based; palette size is max colour + 1.
struct Colouring {
    std::vector<int> colours;

    int palette_size() const;
};

/// True iff every edge has distinct endpoint colours.
bool verify_colouring(const TangencyGraph& g, const Colouring& c);

/// Colours along the given elimination order, assigning each vertex the
/// smallest colour unused by earlier-coloured neighbours. Palette is at most
/// the order's max back degree + 1.
Colouring greedy_colour(const TangencyGraph& g, const EliminationOrder& order);

/// The inductive colouring: greedy along decreasing_radius_order.
Colouring greedy_colour(const Configuration& cfg);

/// Maximum-saturation-first heuristic; ties by higher degree, then lower
/// index. Deterministic.
Colouring dsatur(const TangencyGraph& g);

/// {"colours": [...], "palette_size": k, "proper": bool}
std::string colouring_to_json(const TangencyGraph& g, const Colouring& c);

} // namespace tlab

#include "tlab/colouring.hpp"

#include <algorithm>

#include <json.hpp>

namespace tlab {

int Colouring::palette_size() const {
    int max_colour = -1;
    for (int c : colours) max_colour = std::max(max_colour, c);
    return max_colour + 1;
}

bool verify_colouring(const TangencyGraph& g, const Colouring& c) {
    if (static_cast<int>(c.colours.size()) != g.n) {
        throw UsageError("colouring length does not match vertex count");
    }
    for (const auto& [i, j] : g.edges) {
        if (c.colours[static_cast<std::size_t>(i)] == c.colours[static_cast<std::size_t>(j)]) {
            return false;
        }
    }
    return true;
}

Colouring greedy_colour(const TangencyGraph& g, const EliminationOrder& order) {
    Colouring result;
    result.colours.assign(static_cast<std::size_t>(g.n), -1);
    std::vector<char> used;
    for (int v : order.order) {
        const auto& nbrs = g.adjacency[static_cast<std::size_t>(v)];
        used.assign(nbrs.size() + 1, 0);
        for (int u : nbrs) {
            const int c = result.colours[static_cast<std::size_t>(u)];
            if (c >= 0 && c < static_cast<int>(used.size())) used[static_cast<std::size_t>(c)] = 1;
        }
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        result.colours[static_cast<std::size_t>(v)] = c;
    }
    return result;
}

Colouring greedy_colour(const Configuration& cfg) {
    const TangencyGraph g = build_graph(cfg);
    return greedy_colour(g, decreasing_radius_order(g));
}

Colouring dsatur(const TangencyGraph& g) {
    const int n = g.n;
    Colouring result;
    result.colours.assign(static_cast<std::size_t>(n), -1);
    if (n == 0) return result;

    std::vector<int> saturation(static_cast<std::size_t>(n), 0);
    // neighbour_colours[v][c] = how many neighbours of v carry colour c
    std::vector<std::vector<int>> neighbour_colours(static_cast<std::size_t>(n));

    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (result.colours[static_cast<std::size_t>(v)] != -1) continue;
            if (best == -1) { best = v; continue; }
            const int sv = saturation[static_cast<std::size_t>(v)];
            const int sb = saturation[static_cast<std::size_t>(best)];
            if (sv > sb || (sv == sb && g.degree(v) > g.degree(best))) best = v;
        }

        auto& seen = neighbour_colours[static_cast<std::size_t>(best)];
        int colour = 0;
        while (colour < static_cast<int>(seen.size()) && seen[static_cast<std::size_t>(colour)] > 0) {
            ++colour;
        }
        result.colours[static_cast<std::size_t>(best)] = colour;

        for (int u : g.adjacency[static_cast<std::size_t>(best)]) {
            if (result.colours[static_cast<std::size_t>(u)] != -1) continue;
            auto& counts = neighbour_colours[static_cast<std::size_t>(u)];
            if (colour >= static_cast<int>(counts.size())) counts.resize(static_cast<std::size_t>(colour) + 1, 0);
            if (counts[static_cast<std::size_t>(colour)]++ == 0) ++saturation[static_cast<std::size_t>(u)];
        }
    }
    return result;
}

std::string colouring_to_json(const TangencyGraph& g, const Colouring& c) {
    nlohmann::json out;
    out["colours"] = c.colours;
    out["palette_size"] = c.palette_size();
    out["proper"] = verify_colouring(g, c);
    return out.dump();
}

} // namespace tlab

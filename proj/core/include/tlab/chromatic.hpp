#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tlab/colouring.hpp"

namespace tlab {

/// Budgets are counted in search-tree node expansions, not wall-clock time,
/// so results are reproducible.
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct CliqueResult {
    std::vector<int> vertices; // sorted ascending
    bool budget_exhausted = false;
    std::uint64_t nodes_expanded = 0;

    int size() const { return static_cast<int>(vertices.size()); }
};

/// Branch-and-bound maximum clique with a greedy-colouring bound. Returns a
/// maximum clique if the search completes within budget, otherwise the
/// largest clique found with the exhausted flag set. Deterministic for a
/// fixed budget.
CliqueResult max_clique(const TangencyGraph& g, std::uint64_t budget = kDefaultNodeBudget);

struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    Colouring witness;              // proper, palette_size == upper
    std::vector<int> clique_witness; // induces a complete subgraph
    bool budget_exhausted = false;
    std::uint64_t nodes_expanded = 0;
};

/// Exact chromatic number by branch and bound: clique lower bound, DSATUR
/// upper bound, then ascending k-colourability searches closing the gap.
/// Branching picks the vertex with the most distinctly-coloured neighbours
/// and tries used colours in ascending index plus one fresh colour.
/// Deterministic for a fixed budget.
ChromaticResult chromatic_number(const TangencyGraph& g,
                                 std::uint64_t budget = kDefaultNodeBudget);

/// Same, but reuses an already-computed clique (its node count is charged
/// against the budget).
ChromaticResult chromatic_number(const TangencyGraph& g, std::uint64_t budget,
                                 const CliqueResult& seed_clique);

std::string chromatic_result_to_json(const TangencyGraph& g, const ChromaticResult& r);

} // namespace tlab

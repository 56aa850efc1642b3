#include "tlab/chromatic.hpp"

#include <algorithm>

#include <json.hpp>

namespace tlab {

namespace {

struct Budget {
    std::uint64_t limit;
    std::uint64_t used = 0;

    bool spend() {
        if (used >= limit) return false;
        ++used;
        return true;
    }
};

// Row-major bitset adjacency for the search inner loops.
struct DenseAdj {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit DenseAdj(const TangencyGraph& g)
        : n(g.n),
          words((g.n + 63) / 64),
          bits(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(words), 0) {
        for (const auto& [i, j] : g.edges) {
            set(i, j);
            set(j, i);
        }
    }

    void set(int u, int v) {
        bits[static_cast<std::size_t>(u) * static_cast<std::size_t>(words) +
             static_cast<std::size_t>(v >> 6)] |= (std::uint64_t{1} << (v & 63));
    }
    bool test(int u, int v) const {
        return (bits[static_cast<std::size_t>(u) * static_cast<std::size_t>(words) +
                     static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) &
               1;
    }
};

struct CliqueSearch {
    const DenseAdj& adj;
    Budget& budget;
    std::vector<int> best;
    std::vector<int> current;
    bool exhausted = false;

    CliqueSearch(const DenseAdj& a, Budget& b) : adj(a), budget(b) {}

    // Greedy colour bound: candidates regrouped by colour class; a vertex in
    // class c can extend the clique by at most c+1 more vertices.
    void colour_sort(const std::vector<int>& candidates, std::vector<int>& ordered,
                     std::vector<int>& bounds) const {
        std::vector<std::vector<int>> classes;
        for (int v : candidates) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool conflicts = false;
                for (int u : classes[c]) {
                    if (adj.test(u, v)) {
                        conflicts = true;
                        break;
                    }
                }
                if (!conflicts) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c) {
            for (int v : classes[c]) {
                ordered.push_back(v);
                bounds.push_back(static_cast<int>(c) + 1);
            }
        }
    }

    void expand(const std::vector<int>& candidates) {
        if (exhausted) return;
        if (!budget.spend()) {
            exhausted = true;
            return;
        }
        std::vector<int> ordered;
        std::vector<int> bounds;
        colour_sort(candidates, ordered, bounds);
        for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
            const int v = ordered[static_cast<std::size_t>(i)];
            if (static_cast<int>(current.size()) + bounds[static_cast<std::size_t>(i)] <=
                static_cast<int>(best.size())) {
                return; // bound prunes v and everything before it
            }
            current.push_back(v);
            std::vector<int> next;
            for (int k = 0; k < i; ++k) {
                const int u = ordered[static_cast<std::size_t>(k)];
                if (adj.test(u, v)) next.push_back(u);
            }
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            if (exhausted) return;
        }
    }
};

enum class SearchStatus { Found, Exhausted, Unsatisfiable };

struct KColourSearch {
    const TangencyGraph& g;
    const DenseAdj& adj;
    int k;
    Budget& budget;
    std::vector<int> colours;
    int max_used = -1;

    KColourSearch(const TangencyGraph& g_, const DenseAdj& a, int k_, Budget& b)
        : g(g_), adj(a), k(k_), budget(b), colours(static_cast<std::size_t>(g_.n), -1) {}

    int select_vertex(std::vector<char>& seen) const {
        int best = -1;
        int best_sat = -1;
        for (int v = 0; v < g.n; ++v) {
            if (colours[static_cast<std::size_t>(v)] != -1) continue;
            std::fill(seen.begin(), seen.end(), 0);
            int sat = 0;
            for (int u : g.adjacency[static_cast<std::size_t>(v)]) {
                const int c = colours[static_cast<std::size_t>(u)];
                if (c >= 0 && !seen[static_cast<std::size_t>(c)]) {
                    seen[static_cast<std::size_t>(c)] = 1;
                    ++sat;
                }
            }
            if (best == -1 || sat > best_sat ||
                (sat == best_sat && g.degree(v) > g.degree(best))) {
                best = v;
                best_sat = sat;
            }
        }
        return best;
    }

    SearchStatus dfs(int uncoloured) {
        if (uncoloured == 0) return SearchStatus::Found;
        if (!budget.spend()) return SearchStatus::Exhausted;

        std::vector<char> scratch(static_cast<std::size_t>(k), 0);
        const int v = select_vertex(scratch);
        std::fill(scratch.begin(), scratch.end(), 0);
        for (int u : g.adjacency[static_cast<std::size_t>(v)]) {
            const int c = colours[static_cast<std::size_t>(u)];
            if (c >= 0) scratch[static_cast<std::size_t>(c)] = 1;
        }
        const int colour_limit = std::min(max_used + 1, k - 1);
        for (int c = 0; c <= colour_limit; ++c) {
            if (scratch[static_cast<std::size_t>(c)]) continue;
            colours[static_cast<std::size_t>(v)] = c;
            const int prev_max = max_used;
            max_used = std::max(max_used, c);
            const SearchStatus status = dfs(uncoloured - 1);
            if (status != SearchStatus::Unsatisfiable) return status;
            colours[static_cast<std::size_t>(v)] = -1;
            max_used = prev_max;
        }
        return SearchStatus::Unsatisfiable;
    }
};

CliqueResult run_max_clique(const TangencyGraph& g, const DenseAdj& adj, Budget& budget) {
    CliqueResult result;
    if (g.n > 0) {
        std::vector<int> candidates(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) candidates[static_cast<std::size_t>(v)] = v;
        std::sort(candidates.begin(), candidates.end(), [&g](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        CliqueSearch search(adj, budget);
        search.expand(candidates);
        result.vertices = search.best;
        std::sort(result.vertices.begin(), result.vertices.end());
        result.budget_exhausted = search.exhausted;
    }
    result.nodes_expanded = budget.used;
    return result;
}

ChromaticResult run_chromatic(const TangencyGraph& g, const DenseAdj& adj, Budget& budget,
                              const CliqueResult& clique) {
    ChromaticResult result;
    result.clique_witness = clique.vertices;
    result.budget_exhausted = clique.budget_exhausted;

    if (g.n == 0) {
        result.exact = true;
        result.nodes_expanded = budget.used;
        return result;
    }

    result.lower = std::max(clique.size(), 1);
    Colouring best = dsatur(g);
    result.upper = best.palette_size();

    // The ascending loop keeps the invariant lower == k: each failed search
    // proves k colours impossible, so the first success is exact.
    int k = result.lower;
    while (k < result.upper && !result.budget_exhausted) {
        KColourSearch search(g, adj, k, budget);
        for (std::size_t i = 0; i < clique.vertices.size(); ++i) {
            search.colours[static_cast<std::size_t>(clique.vertices[i])] = static_cast<int>(i);
        }
        search.max_used = clique.size() - 1;
        const SearchStatus status = search.dfs(g.n - clique.size());
        if (status == SearchStatus::Found) {
            best.colours = search.colours;
            result.upper = k;
            break;
        }
        if (status == SearchStatus::Exhausted) {
            result.budget_exhausted = true;
            break;
        }
        result.lower = ++k;
    }

    result.witness = std::move(best);
    result.exact = result.lower == result.upper;
    result.nodes_expanded = budget.used;
    return result;
}

} // namespace

CliqueResult max_clique(const TangencyGraph& g, std::uint64_t budget_limit) {
    const DenseAdj adj(g);
    Budget budget{budget_limit};
    return run_max_clique(g, adj, budget);
}

ChromaticResult chromatic_number(const TangencyGraph& g, std::uint64_t budget_limit) {
    const DenseAdj adj(g);
    Budget budget{budget_limit};
    const CliqueResult clique = run_max_clique(g, adj, budget);
    return run_chromatic(g, adj, budget, clique);
}

ChromaticResult chromatic_number(const TangencyGraph& g, std::uint64_t budget_limit,
                                 const CliqueResult& seed_clique) {
    const DenseAdj adj(g);
    Budget budget{budget_limit, std::min(budget_limit, seed_clique.nodes_expanded)};
    return run_chromatic(g, adj, budget, seed_clique);
}

std::string chromatic_result_to_json(const TangencyGraph& g, const ChromaticResult& r) {
    nlohmann::json out;
    out["lower"] = r.lower;
    out["upper"] = r.upper;
    out["exact"] = r.exact;
    out["witness"] = nlohmann::json::parse(colouring_to_json(g, r.witness));
    out["clique_witness"] = r.clique_witness;
    out["budget_exhausted"] = r.budget_exhausted;
    out["node_expansions"] = r.nodes_expanded;
    return out.dump();
}

} // namespace tlab

#include "tlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace tlab {

TangencyGraph TangencyGraph::from_edges(int n, std::vector<IndexPair> edges,
                                        std::vector<Scalar> radii) {
    if (n < 0) throw UsageError("vertex count must be nonnegative");
    if (!radii.empty() && static_cast<int>(radii.size()) != n) {
        throw UsageError("radii size must equal vertex count");
    }
    TangencyGraph g;
    g.n = n;
    for (auto& [i, j] : edges) {
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n || i == j) throw UsageError("edge endpoints out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.adjacency.assign(static_cast<std::size_t>(n), {});
    for (const auto& [i, j] : g.edges) {
        g.adjacency[static_cast<std::size_t>(i)].push_back(j);
        g.adjacency[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    g.radii = std::move(radii);
    return g;
}

bool TangencyGraph::adjacent(int u, int v) const {
    const auto& nbrs = adjacency[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

TangencyGraph build_graph(const Configuration& cfg) {
    const int n = cfg.size();
    std::vector<IndexPair> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            switch (classify_pair(cfg.ball(i), cfg.ball(j), cfg.policy())) {
            case ContactClass::Tangent:
                edges.emplace_back(i, j);
                break;
            case ContactClass::Overlap: {
                std::ostringstream msg;
                msg << "invalid configuration: balls " << i << " and " << j << " overlap";
                throw DomainViolation(msg.str());
            }
            case ContactClass::Disjoint:
                break;
            }
        }
    }
    std::vector<Scalar> radii;
    radii.reserve(static_cast<std::size_t>(n));
    for (const Ball& b : cfg.balls()) radii.push_back(b.radius);
    return TangencyGraph::from_edges(n, std::move(edges), std::move(radii));
}

int EliminationOrder::max_back_degree() const {
    int best = 0;
    for (int d : back_degrees) best = std::max(best, d);
    return best;
}

EliminationOrder decreasing_radius_order(const TangencyGraph& g) {
    if (!g.radii.empty() && static_cast<int>(g.radii.size()) != g.n) {
        throw UsageError("graph radii do not match vertex count");
    }
    EliminationOrder out;
    out.order.resize(static_cast<std::size_t>(g.n));
    std::iota(out.order.begin(), out.order.end(), 0);
    if (!g.radii.empty()) {
        std::stable_sort(out.order.begin(), out.order.end(), [&g](int a, int b) {
            const int c = g.radii[static_cast<std::size_t>(a)].cmp(
                g.radii[static_cast<std::size_t>(b)]);
            if (c != 0) return c > 0; // larger radius first
            return a < b;
        });
    }
    std::vector<int> position(static_cast<std::size_t>(g.n));
    for (int k = 0; k < g.n; ++k) {
        position[static_cast<std::size_t>(out.order[static_cast<std::size_t>(k)])] = k;
    }
    out.back_degrees.assign(static_cast<std::size_t>(g.n), 0);
    for (int k = 0; k < g.n; ++k) {
        const int v = out.order[static_cast<std::size_t>(k)];
        int back = 0;
        for (int u : g.adjacency[static_cast<std::size_t>(v)]) {
            if (position[static_cast<std::size_t>(u)] < k) ++back;
        }
        out.back_degrees[static_cast<std::size_t>(k)] = back;
    }
    return out;
}

EliminationOrder decreasing_radius_order(const Configuration& cfg) {
    return decreasing_radius_order(build_graph(cfg));
}

int max_back_degree(const Configuration& cfg) {
    return decreasing_radius_order(cfg).max_back_degree();
}

int low_degree_witness(const Configuration& cfg) {
    if (cfg.dimension() != 2) throw UsageError("low_degree_witness requires dimension 2");
    if (cfg.size() < 2) throw UsageError("low_degree_witness requires at least 2 discs");
    if (!is_connected(cfg)) throw UsageError("low_degree_witness requires a connected configuration");
    const TangencyGraph g = build_graph(cfg);
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) <= 5) return v;
    }
    throw InvariantBreach(
        "no disc of tangency degree <= 5 found in a planar disc configuration");
}

std::string graph_to_json(const TangencyGraph& g) {
    nlohmann::json out;
    out["n"] = g.n;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : g.edges) edges.push_back(nlohmann::json::array({i, j}));
    out["edges"] = std::move(edges);
    return out.dump();
}

std::string graph_to_dimacs(const TangencyGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.n << ' ' << g.edge_count() << '\n';
    for (const auto& [i, j] : g.edges) out << "e " << (i + 1) << ' ' << (j + 1) << '\n';
    return out.str();
}

} // namespace tlab

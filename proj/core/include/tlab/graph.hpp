#pragma once

#include <string>
#include <vector>

#include "tlab/geometry.hpp"

namespace tlab {

/// Simple undirected graph on ball indices: an edge for every tangent pair.
/// Radii are copied from the source configuration so elimination orders can
/// be derived from the graph alone; synthetic graphs may leave them empty.
struct TangencyGraph {
    int n = 0;
    std::vector<IndexPair> edges;            // sorted lexicographically, i < j
    std::vector<std::vector<int>> adjacency; // sorted neighbour lists
    std::vector<Scalar> radii;               // size n or empty

    static TangencyGraph from_edges(int n, std::vector<IndexPair> edges,
                                    std::vector<Scalar> radii = {});

    std::size_t edge_count() const { return edges.size(); }
    int degree(int v) const { return static_cast<int>(adjacency[static_cast<std::size_t>(v)].size()); }
    bool adjacent(int u, int v) const;
};

/// Pair scan over all C(n,2) pairs; throws DomainViolation if any pair
/// overlaps (the configuration is invalid).
TangencyGraph build_graph(const Configuration& cfg);

/// A vertex elimination order together with, for each position k, the number
/// of neighbours of order[k] occurring earlier in the order.
struct EliminationOrder {
    std::vector<int> order;
    std::vector<int> back_degrees;

    int max_back_degree() const;
};

/// Vertices sorted by radius, largest first, ties by ascending index.
/// Colouring greedily along this order realizes the inductive
/// remove-the-smallest-ball argument.
EliminationOrder decreasing_radius_order(const TangencyGraph& g);
EliminationOrder decreasing_radius_order(const Configuration& cfg);

int max_back_degree(const Configuration& cfg);

/// For planar disc configurations (d = 2, connected, >= 2 balls) some disc
/// always touches at most five others; returns the smallest such index.
/// Not finding one signals a geometry bug, so that throws InvariantBreach.
int low_degree_witness(const Configuration& cfg);

/// {"n": n, "edges": [[i,j],...]} with pairs sorted lexicographically.
std::string graph_to_json(const TangencyGraph& g);

/// DIMACS-col text: "p edge n m" header, 1-based "e i j" lines.
std::string graph_to_dimacs(const TangencyGraph& g);

} // namespace tlab

#pragma once

#include <cstdint>
#include <vector>

#include "dualresist/dual_matrix.hpp"

namespace dualresist {

/// One undirected edge {i, j} with 1-based endpoints and the infinitesimal
/// conductance coefficient a_hat (the resistance perturbation is -a_hat).
/// The standard conductance of every edge is 1.
struct Edge {
    int i = 0;
    int j = 0;
    double a_hat = 0.0;
};

/// A simple undirected graph with unit standard conductances and a dual
/// perturbation coefficient per edge. Vertices are labeled 1..n externally.
/// Immutable after construction.
class PerturbedGraph {
public:
    /// Validates and canonicalizes: endpoints swapped to i < j, edges sorted
    /// lexicographically. Throws SelfLoop, DuplicateEdge, VertexOutOfRange.
    PerturbedGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;

    /// Same topology with every a_hat set to 0.
    PerturbedGraph unperturbed() const;

    /// Same topology with a_hat on edge {i, j} only (all other edges 0).
    /// Throws EdgeNotInGraph when {i, j} is not an edge.
    PerturbedGraph with_single_perturbation(int i, int j, double a_hat) const;

    /// Same topology minus edge {i, j}. Throws EdgeNotInGraph.
    PerturbedGraph without_edge(int i, int j) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// L_w = L + L_hat*eps. Standard part: degree matrix minus adjacency;
/// infinitesimal part assembled from the a_hat coefficients the same way.
/// Rows and columns of both parts sum to zero.
DualMatrix laplacian(const PerturbedGraph& g);

/// Connectivity of the standard graph, by traversal.
bool is_connected(const PerturbedGraph& g);

/// Number of spanning trees, from the determinant of the Laplacian with the
/// last row and column deleted. The float determinant is rounded under a
/// |det - round(det)| < 0.5 guard and cross-checked against an exact
/// fraction-free (Bareiss) integer determinant when that fits in 128 bits.
/// Throws Disconnected, RoundingGuardFailed.
std::int64_t spanning_tree_count(const PerturbedGraph& g);

/// Number of spanning trees containing edge {i, j}:
/// tau(e) = tau(G) - tau(G - e), with tau(G - e) = 0 when G - e disconnects.
/// Throws EdgeNotInGraph, Disconnected.
std::int64_t spanning_trees_containing_edge(const PerturbedGraph& g, int i, int j);

}  // namespace dualresist

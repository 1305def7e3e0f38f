#pragma once

#include "dualresist/dual_matrix.hpp"
#include "dualresist/dual_scalar.hpp"
#include "dualresist/graph.hpp"

namespace dualresist {

/// R_ij(G^w) = standard + infinitesimal*eps. The standard part is the
/// classical resistance distance R_ij(G); the infinitesimal part is its
/// first-order perturbation.
struct ResistanceValue {
    double standard = 0.0;
    double infinitesimal = 0.0;
};

/// Kf(G^w) = standard + infinitesimal*eps; the infinitesimal part is the
/// Kirchhoff index perturbation.
struct KirchhoffValue {
    double standard = 0.0;
    double infinitesimal = 0.0;
};

enum class KirchhoffMethod { trace, one_inverse, block };

/// Dual Moore-Penrose inverse of the graph Laplacian,
/// L_w^+ = L^+ - L^+ L_hat L^+ eps. Throws Disconnected.
DualMatrix dual_laplacian_pinv(const PerturbedGraph& g);

/// R_ij(G^w) = (L_w^+)_ii + (L_w^+)_jj - 2 (L_w^+)_ij.
ResistanceValue resistance_mp(const PerturbedGraph& g, int i, int j);

/// Same quantity from the regularized inverse (L_w + J/n)^-1; the J/n shift
/// cancels in the ii + jj - 2ij combination.
ResistanceValue resistance_regularized(const PerturbedGraph& g, int i, int j);

/// Same quantity from the bordered block route: relabel j to n, delete the
/// last row and column, and read (L~_11^-1)_ii off the dual block inverse.
ResistanceValue resistance_block(const PerturbedGraph& g, int i, int j);

/// All-pairs resistance distances as one symmetric dual matrix with exactly
/// zero diagonal. The eigendecomposition is computed once and shared.
DualMatrix resistance_matrix(const PerturbedGraph& g);

/// Kf(G^w) by one of three agreeing routes:
///   trace:       n tr(L_w^+)
///   one_inverse: n tr(X) - 1^T X 1 for the canonical block {1}-inverse X
///   block:       n tr(L~_11^-1) - 1^T L~_11^-1 1
KirchhoffValue kirchhoff_index(const PerturbedGraph& g,
                               KirchhoffMethod method = KirchhoffMethod::trace);

/// Node potentials v solving L_w v = Y (1_source - 1_sink), grounded through
/// the pseudoinverse (so 1^T v = 0). (v_source - v_sink)/Y is the resistance
/// distance. Throws Disconnected, SameVertex, VertexOutOfRange.
DualVector node_potentials(const PerturbedGraph& g, int source, int sink,
                           DualScalar current);

}  // namespace dualresist

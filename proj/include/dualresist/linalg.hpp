#pragma once

#include <vector>

#include "dualresist/dual_matrix.hpp"
#include "dualresist/matrix.hpp"

namespace dualresist {

/// Eigensystem of a real symmetric matrix. Eigenvalues are sorted descending;
/// eigenvector columns are orthonormal and aligned with the eigenvalues, and
/// each column is flipped so its first nonzero component is positive.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

/// Cyclic Jacobi rotations. Converges when the off-diagonal Frobenius norm
/// drops below 1e-12 * ||S||_F; at most 100 sweeps, else NoConvergence.
/// Throws NotSymmetric when max|S - S^T| exceeds symmetry_tol.
SpectralDecomposition symmetric_eigen(const Matrix& s, double symmetry_tol = 1e-9);

/// Moore-Penrose inverse from a spectral decomposition: eigenvalues with
/// |lambda| <= rank_tol * max|lambda| are treated as zero.
Matrix pinv_from_eigen(const SpectralDecomposition& eig, double rank_tol = 1e-10);

/// Moore-Penrose inverse of a real symmetric matrix via its eigensystem.
Matrix real_pinv(const Matrix& s, double rank_tol = 1e-10);

/// Moore-Penrose inverse of an arbitrary real matrix, via symmetric
/// eigen-solves of the Gram matrix: A^+ = (A^T A)^+ A^T.
Matrix real_pinv_general(const Matrix& a, double rank_tol = 1e-10);

/// Inverse of a square dual matrix: A^-1 = A_s^-1 - A_s^-1 A_d A_s^-1 eps.
/// A is invertible iff A_s is; throws SingularStandardPart otherwise.
DualMatrix dual_inverse(const DualMatrix& a, double pivot_tol = 1e-12);

/// The Moore-Penrose inverse of a dual matrix exists iff
/// (I - A_s A_s^+) A_d (I - A_s^+ A_s) = 0; checked entrywise against tol.
bool dual_mp_exists(const DualMatrix& a, double tol = 1e-9);

/// Dual Moore-Penrose inverse A^+ = A_s^+ - R eps with
/// R = A_s^+ A_d A_s^+ - (A_s^T A_s)^+ A_d^T (I - A_s A_s^+)
///                     - (I - A_s^+ A_s) A_d^T (A_s A_s^T)^+.
/// Throws MPDoesNotExist when the existence condition fails.
DualMatrix dual_pinv(const DualMatrix& a, double tol = 1e-9);

/// A member of the {1}-inverse family X0 A X0 + (I - X0 A) P + Q (I - A X0).
/// X0 must itself satisfy A X0 A = A within tol, else NotAOneInverse.
DualMatrix one_inverse_member(const DualMatrix& a, const DualMatrix& x0,
                              const DualMatrix& p, const DualMatrix& q,
                              double tol = 1e-9);

struct SolveResult {
    DualVector particular;  // X0 b
    DualMatrix projector;   // I - X0 A; general solution = particular + projector * u
    bool solvable = false;
};

/// Solve A x = b through a {1}-inverse X0 of A. The system is solvable iff
/// A X0 b = b; when it is, every particular + projector*u solves it.
SolveResult dual_solve(const DualMatrix& a, const DualVector& b, const DualMatrix& x0,
                       double tol = 1e-9);

}  // namespace dualresist

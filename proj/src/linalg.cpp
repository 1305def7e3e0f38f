#include "dualresist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dualresist/errors.hpp"

namespace dualresist {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagRel = 1e-12;  // convergence: off(A) <= kOffDiagRel * ||S||_F

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

// Flip eigenvector columns so the first component above noise is positive.
void fix_column_signs(Matrix& v) {
    for (std::size_t j = 0; j < v.cols(); ++j) {
        for (std::size_t i = 0; i < v.rows(); ++i) {
            const double x = v(i, j);
            if (std::abs(x) > 1e-12) {
                if (x < 0.0)
                    for (std::size_t k = 0; k < v.rows(); ++k) v(k, j) = -v(k, j);
                break;
            }
        }
    }
}

}  // namespace

SpectralDecomposition symmetric_eigen(const Matrix& s, double symmetry_tol) {
    if (s.rows() != s.cols()) throw NotSymmetric("matrix is not square");
    const std::size_t n = s.rows();

    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            asym = std::max(asym, std::abs(s(i, j) - s(j, i)));
    if (asym > symmetry_tol) throw NotSymmetric("matrix is not symmetric within tolerance");

    Matrix a = 0.5 * (s + transpose(s));
    Matrix v = Matrix::identity(n);
    const double threshold = kOffDiagRel * frobenius_norm(a);

    bool converged = n < 2;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                // Entry already negligible against its diagonal: zero it.
                if (std::abs(apq) * 100.0 + std::abs(app) == std::abs(app) &&
                    std::abs(apq) * 100.0 + std::abs(aqq) == std::abs(aqq)) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;  // theta^2 would overflow
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = a(p, k) = c * akp - sn * akq;
                    a(k, q) = a(q, k) = sn * akp + c * akq;
                }
                a(p, p) = c * c * app - 2.0 * sn * c * apq + sn * sn * aqq;
                a(q, q) = sn * sn * app + 2.0 * sn * c * apq + c * c * aqq;
                a(p, q) = a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(a) > threshold)
        throw NoConvergence("Jacobi sweep budget exhausted");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    SpectralDecomposition dec;
    dec.eigenvalues.resize(n);
    dec.eigenvectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        dec.eigenvalues[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) dec.eigenvectors(i, j) = v(i, order[j]);
    }
    fix_column_signs(dec.eigenvectors);
    return dec;
}

Matrix pinv_from_eigen(const SpectralDecomposition& eig, double rank_tol) {
    const std::size_t n = eig.eigenvalues.size();
    Matrix p(n, n);
    double max_eig = 0.0;
    for (double lambda : eig.eigenvalues) max_eig = std::max(max_eig, std::abs(lambda));
    if (max_eig == 0.0) return p;
    const double cutoff = rank_tol * max_eig;
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.eigenvalues[k];
        if (std::abs(lambda) <= cutoff) continue;
        const double w = 1.0 / lambda;
        for (std::size_t i = 0; i < n; ++i) {
            const double pik = eig.eigenvectors(i, k);
            if (pik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j)
                p(i, j) += w * pik * eig.eigenvectors(j, k);
        }
    }
    return p;
}

Matrix real_pinv(const Matrix& s, double rank_tol) {
    return pinv_from_eigen(symmetric_eigen(s), rank_tol);
}

Matrix real_pinv_general(const Matrix& a, double rank_tol) {
    if (a.rows() == a.cols() && is_symmetric(a, 1e-12 * std::max(1.0, max_abs(a))))
        return real_pinv(a, rank_tol);
    const Matrix at = transpose(a);
    return pinv_from_eigen(symmetric_eigen(at * a), rank_tol) * at;
}

DualMatrix dual_inverse(const DualMatrix& a, double pivot_tol) {
    if (a.rows() != a.cols()) throw Error("dual_inverse: matrix must be square");
    auto inv = lu_inverse(a.standard, pivot_tol);
    if (!inv) throw SingularStandardPart("standard part is numerically singular");
    Matrix d = -(*inv * a.infinitesimal * *inv);
    return {std::move(*inv), std::move(d)};
}

namespace {

struct MpParts {
    Matrix as_pinv;          // A_s^+
    Matrix gram_left_pinv;   // (A_s^T A_s)^+
    Matrix gram_right_pinv;  // (A_s A_s^T)^+
};

MpParts mp_parts(const Matrix& as, double rank_tol) {
    MpParts parts;
    if (as.rows() == as.cols() && is_symmetric(as, 1e-12 * std::max(1.0, max_abs(as)))) {
        // One eigendecomposition serves all three pseudoinverses.
        const SpectralDecomposition eig = symmetric_eigen(as);
        parts.as_pinv = pinv_from_eigen(eig, rank_tol);
        parts.gram_left_pinv = parts.as_pinv * parts.as_pinv;
        parts.gram_right_pinv = parts.gram_left_pinv;
    } else {
        const Matrix at = transpose(as);
        parts.gram_left_pinv = real_pinv(at * as, rank_tol);
        parts.gram_right_pinv = real_pinv(as * at, rank_tol);
        parts.as_pinv = parts.gram_left_pinv * at;
    }
    return parts;
}

double mp_existence_defect(const DualMatrix& a, const Matrix& as_pinv) {
    const Matrix left = Matrix::identity(a.rows()) - a.standard * as_pinv;
    const Matrix right = Matrix::identity(a.cols()) - as_pinv * a.standard;
    return max_abs(left * a.infinitesimal * right);
}

}  // namespace

bool dual_mp_exists(const DualMatrix& a, double tol) {
    const MpParts parts = mp_parts(a.standard, 1e-10);
    return mp_existence_defect(a, parts.as_pinv) <= tol;
}

DualMatrix dual_pinv(const DualMatrix& a, double tol) {
    const MpParts parts = mp_parts(a.standard, 1e-10);
    if (mp_existence_defect(a, parts.as_pinv) > tol)
        throw MPDoesNotExist("dual Moore-Penrose existence condition fails");

    const Matrix proj_right = Matrix::identity(a.rows()) - a.standard * parts.as_pinv;
    const Matrix proj_left = Matrix::identity(a.cols()) - parts.as_pinv * a.standard;
    const Matrix adt = transpose(a.infinitesimal);
    const Matrix r = parts.as_pinv * a.infinitesimal * parts.as_pinv -
                     parts.gram_left_pinv * adt * proj_right -
                     proj_left * adt * parts.gram_right_pinv;
    return {parts.as_pinv, -r};
}

namespace {

void require_one_inverse(const DualMatrix& a, const DualMatrix& x0, double tol) {
    if (max_abs_diff(a * x0 * a, a) > tol)
        throw NotAOneInverse("X0 does not satisfy A X0 A = A within tolerance");
}

}  // namespace

DualMatrix one_inverse_member(const DualMatrix& a, const DualMatrix& x0,
                              const DualMatrix& p, const DualMatrix& q, double tol) {
    require_one_inverse(a, x0, tol);
    const DualMatrix in = DualMatrix::identity(a.cols());
    const DualMatrix im = DualMatrix::identity(a.rows());
    return x0 * a * x0 + (in - x0 * a) * p + q * (im - a * x0);
}

SolveResult dual_solve(const DualMatrix& a, const DualVector& b, const DualMatrix& x0,
                       double tol) {
    require_one_inverse(a, x0, tol);
    SolveResult res;
    res.particular = x0 * b;
    res.projector = DualMatrix::identity(a.cols()) - x0 * a;
    res.solvable = max_abs(a * res.particular - b) <= tol;
    return res;
}

}  // namespace dualresist

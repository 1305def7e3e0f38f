#pragma once

#include "dualresist/dual_scalar.hpp"
#include "dualresist/matrix.hpp"

namespace dualresist {

/// A dual matrix A = A_s + A_d*eps: two equally shaped real parts.
struct DualMatrix {
    Matrix standard;
    Matrix infinitesimal;

    DualMatrix() = default;

    /// Purely standard matrix (zero infinitesimal part).
    explicit DualMatrix(Matrix s)
        : standard(std::move(s)),
          infinitesimal(standard.rows(), standard.cols()) {}

    DualMatrix(Matrix s, Matrix d);

    static DualMatrix identity(std::size_t n) { return DualMatrix(Matrix::identity(n)); }

    std::size_t rows() const { return standard.rows(); }
    std::size_t cols() const { return standard.cols(); }

    DualScalar entry(std::size_t i, std::size_t j) const {
        return {standard(i, j), infinitesimal(i, j)};
    }
};

DualMatrix operator+(const DualMatrix& a, const DualMatrix& b);
DualMatrix operator-(const DualMatrix& a, const DualMatrix& b);

// (A_s + A_d e)(B_s + B_d e) = A_s B_s + (A_s B_d + A_d B_s) e.
DualMatrix operator*(const DualMatrix& a, const DualMatrix& b);

DualMatrix transpose(const DualMatrix& a);
DualScalar trace(const DualMatrix& a);
DualScalar entry_sum(const DualMatrix& a);  // 1^T A 1
double max_abs(const DualMatrix& a);        // max over both parts
double max_abs_diff(const DualMatrix& a, const DualMatrix& b);

struct DualVector {
    Vector standard;
    Vector infinitesimal;

    DualVector() = default;
    explicit DualVector(std::size_t n) : standard(n, 0.0), infinitesimal(n, 0.0) {}
    DualVector(Vector s, Vector d);

    std::size_t size() const { return standard.size(); }
    DualScalar entry(std::size_t i) const { return {standard[i], infinitesimal[i]}; }
};

DualVector operator+(const DualVector& a, const DualVector& b);
DualVector operator-(const DualVector& a, const DualVector& b);
DualVector operator*(const DualMatrix& a, const DualVector& x);
double max_abs(const DualVector& x);

}  // namespace dualresist

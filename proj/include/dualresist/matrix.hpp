#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace dualresist {

/// Dense row-major real matrix. Everything here is desk scale (n up to a few
/// hundred); no sparsity, no views.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(double c);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(Matrix a, double c);
Matrix operator*(double c, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);
double trace(const Matrix& a);
double entry_sum(const Matrix& a);  // 1^T A 1
double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);
bool is_symmetric(const Matrix& a, double tol);

/// Copy of `a` with row k and column k removed.
Matrix delete_row_col(const Matrix& a, std::size_t k);

using Vector = std::vector<double>;
Vector mat_vec(const Matrix& a, const Vector& x);
double max_abs(const Vector& x);

/// Inverse by LU with partial pivoting. Returns nullopt when a pivot falls
/// below pivot_tol * max|A| (numerically singular).
std::optional<Matrix> lu_inverse(Matrix a, double pivot_tol = 1e-12);

/// Determinant by LU with partial pivoting; 0 for a singular input.
double lu_determinant(Matrix a);

}  // namespace dualresist

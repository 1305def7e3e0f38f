#include "dualresist/dual_matrix.hpp"

#include <algorithm>
#include <utility>

#include "dualresist/errors.hpp"

namespace dualresist {

DualMatrix::DualMatrix(Matrix s, Matrix d)
    : standard(std::move(s)), infinitesimal(std::move(d)) {
    if (!standard.same_shape(infinitesimal))
        throw Error("dual matrix parts must have identical shapes");
}

DualMatrix operator+(const DualMatrix& a, const DualMatrix& b) {
    return {a.standard + b.standard, a.infinitesimal + b.infinitesimal};
}

DualMatrix operator-(const DualMatrix& a, const DualMatrix& b) {
    return {a.standard - b.standard, a.infinitesimal - b.infinitesimal};
}

DualMatrix operator*(const DualMatrix& a, const DualMatrix& b) {
    return {a.standard * b.standard,
            a.standard * b.infinitesimal + a.infinitesimal * b.standard};
}

DualMatrix transpose(const DualMatrix& a) {
    return {transpose(a.standard), transpose(a.infinitesimal)};
}

DualScalar trace(const DualMatrix& a) {
    return {trace(a.standard), trace(a.infinitesimal)};
}

DualScalar entry_sum(const DualMatrix& a) {
    return {entry_sum(a.standard), entry_sum(a.infinitesimal)};
}

double max_abs(const DualMatrix& a) {
    return std::max(max_abs(a.standard), max_abs(a.infinitesimal));
}

double max_abs_diff(const DualMatrix& a, const DualMatrix& b) {
    return std::max(max_abs_diff(a.standard, b.standard),
                    max_abs_diff(a.infinitesimal, b.infinitesimal));
}

DualVector::DualVector(Vector s, Vector d)
    : standard(std::move(s)), infinitesimal(std::move(d)) {
    if (standard.size() != infinitesimal.size())
        throw Error("dual vector parts must have identical lengths");
}

DualVector operator+(const DualVector& a, const DualVector& b) {
    if (a.size() != b.size()) throw Error("dual vector length mismatch");
    DualVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.standard[i] = a.standard[i] + b.standard[i];
        r.infinitesimal[i] = a.infinitesimal[i] + b.infinitesimal[i];
    }
    return r;
}

DualVector operator-(const DualVector& a, const DualVector& b) {
    if (a.size() != b.size()) throw Error("dual vector length mismatch");
    DualVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.standard[i] = a.standard[i] - b.standard[i];
        r.infinitesimal[i] = a.infinitesimal[i] - b.infinitesimal[i];
    }
    return r;
}

DualVector operator*(const DualMatrix& a, const DualVector& x) {
    Vector s = mat_vec(a.standard, x.standard);
    Vector d = mat_vec(a.standard, x.infinitesimal);
    const Vector d2 = mat_vec(a.infinitesimal, x.standard);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += d2[i];
    return {std::move(s), std::move(d)};
}

double max_abs(const DualVector& x) {
    return std::max(max_abs(x.standard), max_abs(x.infinitesimal));
}

}  // namespace dualresist

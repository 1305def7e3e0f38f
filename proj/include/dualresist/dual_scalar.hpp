#pragma once

#include "dualresist/errors.hpp"

namespace dualresist {

/// A dual number a = standard + infinitesimal*eps, with eps != 0 and eps^2 = 0.
/// Both components are doubles; the arithmetic adds no rounding beyond the
/// underlying real operations.
struct DualScalar {
    double standard = 0.0;
    double infinitesimal = 0.0;

    constexpr DualScalar() = default;
    constexpr DualScalar(double s, double d = 0.0) : standard(s), infinitesimal(d) {}

    constexpr bool operator==(const DualScalar&) const = default;
};

constexpr DualScalar operator+(DualScalar a, DualScalar b) {
    return {a.standard + b.standard, a.infinitesimal + b.infinitesimal};
}

constexpr DualScalar operator-(DualScalar a, DualScalar b) {
    return {a.standard - b.standard, a.infinitesimal - b.infinitesimal};
}

constexpr DualScalar operator-(DualScalar a) { return {-a.standard, -a.infinitesimal}; }

// (a_s + a_d e)(b_s + b_d e) = a_s b_s + (a_s b_d + a_d b_s) e; the e^2 term
// never materializes.
constexpr DualScalar operator*(DualScalar a, DualScalar b) {
    return {a.standard * b.standard,
            a.standard * b.infinitesimal + a.infinitesimal * b.standard};
}

/// 1/a = 1/a_s - (a_d / a_s^2) eps. A dual number with zero standard part has
/// no reciprocal.
inline DualScalar dual_reciprocal(DualScalar a) {
    if (a.standard == 0.0) {
        throw ZeroStandardPart("dual number with zero standard part is not invertible");
    }
    return {1.0 / a.standard, -a.infinitesimal / (a.standard * a.standard)};
}

inline DualScalar operator/(DualScalar a, DualScalar b) { return a * dual_reciprocal(b); }

/// Weight of an edge whose unit resistance carries the first-order
/// perturbation -a_hat: the conductance 1 + a_hat*eps.
constexpr DualScalar edge_conductance(double a_hat) { return {1.0, a_hat}; }

}  // namespace dualresist

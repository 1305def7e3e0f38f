#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dualresist/graph.hpp"
#include "dualresist/resistance.hpp"

namespace dualresist {

/// Kirchhoff index perturbation with the two global upper bounds:
///   eigsum:  |dKf| <= (n / lambda_{n-1}^2) * sum_i |mu_i|
///   specrad: |dKf| <= n * rho(L_hat) * sum_{i<n} 1/lambda_i^2
/// where lambda are the Laplacian eigenvalues (descending) and mu the
/// eigenvalues of the perturbation Laplacian.
struct PerturbationReport {
    KirchhoffValue kf;
    double delta_kf = 0.0;
    double bound_eigsum = 0.0;
    double bound_specrad = 0.0;
    std::vector<double> eig_laplacian;     // lambda_1 >= ... >= lambda_n
    std::vector<double> eig_perturbation;  // mu_1 >= ... >= mu_n
    bool eigsum_holds = false;             // with 1e-9 additive slack
    bool specrad_holds = false;
};

/// Result of perturbing a single edge e = {i, j} by -a_hat on its unit
/// resistance. delta_r is -a_hat * R_ij(G)^2; delta_r_tree the same quantity
/// by spanning-tree counts, -a_hat * tau_e^2 / tau^2. kf_ratio is
/// dKf / (-2 n a_hat), absent when a_hat = 0; it always lies between
/// 1/lambda_1^2 and 1/lambda_{n-1}^2.
struct EdgePerturbationResult {
    int i = 0;
    int j = 0;
    double a_hat = 0.0;
    double delta_r = 0.0;
    double delta_r_tree = 0.0;
    std::int64_t tau = 0;
    std::int64_t tau_e = 0;
    std::optional<double> kf_ratio;
    double kf_ratio_lower = 0.0;  // 1/lambda_1^2
    double kf_ratio_upper = 0.0;  // 1/lambda_{n-1}^2
};

/// dKf(G^w) = -n tr(L^+ L_hat L^+). Throws Disconnected.
double kirchhoff_perturbation(const PerturbedGraph& g);

double bound_eigsum(const PerturbedGraph& g);
double bound_specrad(const PerturbedGraph& g);

/// Single-edge analysis on the topology of `base` (its own perturbation
/// coefficients are ignored; only edge {i, j} carries a_hat).
/// Throws EdgeNotInGraph, Disconnected.
EdgePerturbationResult single_edge_analysis(const PerturbedGraph& base, int i, int j,
                                            double a_hat);

PerturbationReport perturbation_report(const PerturbedGraph& g);

}  // namespace dualresist

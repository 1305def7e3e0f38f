#include "dualresist/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "dualresist/errors.hpp"
#include "dualresist/linalg.hpp"

namespace dualresist {

namespace {

constexpr double kBoundSlack = 1e-9;  // additive: bounds are 0 at a_hat == 0

void require_connected(const PerturbedGraph& g) {
    if (!is_connected(g)) throw Disconnected("graph is not connected");
}

}  // namespace

double kirchhoff_perturbation(const PerturbedGraph& g) {
    return kirchhoff_index(g, KirchhoffMethod::trace).infinitesimal;
}

double bound_eigsum(const PerturbedGraph& g) {
    require_connected(g);
    const int n = g.vertex_count();
    if (n < 2) return 0.0;
    const DualMatrix lw = laplacian(g);
    const auto lambda = symmetric_eigen(lw.standard).eigenvalues;
    const auto mu = symmetric_eigen(lw.infinitesimal).eigenvalues;
    double mu_abs_sum = 0.0;
    for (double m : mu) mu_abs_sum += std::abs(m);
    const double algebraic_connectivity = lambda[static_cast<std::size_t>(n - 2)];
    return static_cast<double>(n) / (algebraic_connectivity * algebraic_connectivity) *
           mu_abs_sum;
}

double bound_specrad(const PerturbedGraph& g) {
    require_connected(g);
    const int n = g.vertex_count();
    if (n < 2) return 0.0;
    const DualMatrix lw = laplacian(g);
    const auto lambda = symmetric_eigen(lw.standard).eigenvalues;
    const auto mu = symmetric_eigen(lw.infinitesimal).eigenvalues;
    double rho = 0.0;
    for (double m : mu) rho = std::max(rho, std::abs(m));
    double inv_sq_sum = 0.0;
    for (int k = 0; k < n - 1; ++k) {
        const double lk = lambda[static_cast<std::size_t>(k)];
        inv_sq_sum += 1.0 / (lk * lk);
    }
    return static_cast<double>(n) * rho * inv_sq_sum;
}

EdgePerturbationResult single_edge_analysis(const PerturbedGraph& base, int i, int j,
                                            double a_hat) {
    if (i > j) std::swap(i, j);
    require_connected(base);
    const PerturbedGraph perturbed = base.with_single_perturbation(i, j, a_hat);

    EdgePerturbationResult res;
    res.i = i;
    res.j = j;
    res.a_hat = a_hat;

    const double r_std = resistance_mp(perturbed, i, j).standard;
    res.delta_r = -a_hat * r_std * r_std;

    res.tau = spanning_tree_count(base);
    res.tau_e = spanning_trees_containing_edge(base, i, j);
    const double tree_ratio = static_cast<double>(res.tau_e) / static_cast<double>(res.tau);
    res.delta_r_tree = -a_hat * tree_ratio * tree_ratio;

    const int n = base.vertex_count();
    const auto lambda = symmetric_eigen(laplacian(base).standard).eigenvalues;
    const double lambda_max = lambda.front();
    const double lambda_conn = lambda[static_cast<std::size_t>(n - 2)];
    res.kf_ratio_lower = 1.0 / (lambda_max * lambda_max);
    res.kf_ratio_upper = 1.0 / (lambda_conn * lambda_conn);
    if (a_hat != 0.0) {
        const double delta_kf = kirchhoff_perturbation(perturbed);
        res.kf_ratio = delta_kf / (-2.0 * static_cast<double>(n) * a_hat);
    }
    return res;
}

PerturbationReport perturbation_report(const PerturbedGraph& g) {
    require_connected(g);
    PerturbationReport report;
    report.kf = kirchhoff_index(g, KirchhoffMethod::trace);
    report.delta_kf = report.kf.infinitesimal;
    report.bound_eigsum = bound_eigsum(g);
    report.bound_specrad = bound_specrad(g);
    const DualMatrix lw = laplacian(g);
    report.eig_laplacian = symmetric_eigen(lw.standard).eigenvalues;
    report.eig_perturbation = symmetric_eigen(lw.infinitesimal).eigenvalues;
    report.eigsum_holds = std::abs(report.delta_kf) <= report.bound_eigsum + kBoundSlack;
    report.specrad_holds = std::abs(report.delta_kf) <= report.bound_specrad + kBoundSlack;
    return report;
}

}  // namespace dualresist

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dualresist/graph.hpp"

namespace dualresist {

/// Finite-difference probe of a resistance derivative. fd_estimates[k] is the
/// forward difference (R(h_k) - R(0)) / h_k on the real weighted graph with
/// conductances 1 + h_k * a_hat_e; extrapolated removes the O(h) truncation
/// term using the two smallest step sizes.
struct FDResult {
    std::vector<double> h_values;
    std::vector<double> fd_estimates;
    double extrapolated = 0.0;
    double agreement_error = 0.0;  // vs the dual infinitesimal part
};

/// Re-solves the real weighted network at each step size and compares the
/// extrapolated derivative against resistance_mp(g, i, j).infinitesimal.
/// Throws NonPositiveConductance when some 1 + h * a_hat_e <= 0.
FDResult finite_difference_resistance(const PerturbedGraph& g, int i, int j,
                                      const std::vector<double>& h_values);

struct TreeCountOracle {
    std::int64_t tau = 0;
    std::map<std::pair<int, int>, std::int64_t> per_edge;  // edge -> tau(e)
};

/// Enumerates all (n-1)-edge subsets and counts the spanning trees, plus the
/// number containing each edge. Budget: n <= 10 and m <= 20, else TooLarge.
TreeCountOracle brute_force_spanning_trees(const PerturbedGraph& g);

/// Samples `trials` random members of the {1}-inverse family of L_w (random
/// dual P, Q with entries uniform in [-1, 1]) and checks that every member
/// reproduces the resistance distance for 5 random pairs and the Kirchhoff
/// index, all within 1e-8.
bool one_inverse_member_independence(const PerturbedGraph& g, int trials,
                                     unsigned seed);

}  // namespace dualresist

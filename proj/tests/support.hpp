#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "dualresist/dual_matrix.hpp"
#include "dualresist/graph.hpp"

namespace testsupport {

// Worst entrywise violation of the four Moore-Penrose axioms, over both
// dual parts.
inline double mp_axioms_defect(const dualresist::DualMatrix& a,
                               const dualresist::DualMatrix& x) {
    using dualresist::max_abs_diff;
    const dualresist::DualMatrix ax = a * x;
    const dualresist::DualMatrix xa = x * a;
    double d = max_abs_diff(a * x * a, a);
    d = std::max(d, max_abs_diff(x * a * x, x));
    d = std::max(d, max_abs_diff(transpose(ax), ax));
    d = std::max(d, max_abs_diff(transpose(xa), xa));
    return d;
}

// Erdos-Renyi G(n, p) with a_hat uniform in [-1, 1]; resampled until the
// standard graph is connected.
inline dualresist::PerturbedGraph random_connected_graph(std::mt19937& rng, int n,
                                                         double edge_prob,
                                                         bool perturbed = true) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (;;) {
        std::vector<dualresist::Edge> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (coin(rng) < edge_prob)
                    edges.push_back({i, j, perturbed ? coeff(rng) : 0.0});
        dualresist::PerturbedGraph g(n, std::move(edges));
        if (dualresist::is_connected(g)) return g;
    }
}

// The seeded ensemble used by the randomized properties: `count` connected
// graphs with n uniform in [n_min, n_max] and edge probability 0.5.
inline std::vector<dualresist::PerturbedGraph> random_ensemble(unsigned seed, int count,
                                                               int n_min, int n_max) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size(n_min, n_max);
    std::vector<dualresist::PerturbedGraph> graphs;
    graphs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        graphs.push_back(random_connected_graph(rng, size(rng), 0.5));
    return graphs;
}

inline dualresist::PerturbedGraph path_graph(int n, double a_hat = 0.0) {
    std::vector<dualresist::Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, a_hat});
    return {n, std::move(edges)};
}

inline dualresist::PerturbedGraph cycle_graph(int n) {
    std::vector<dualresist::Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, 0.0});
    edges.push_back({1, n, 0.0});
    return {n, std::move(edges)};
}

inline dualresist::PerturbedGraph complete_graph(int n) {
    std::vector<dualresist::Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j, 0.0});
    return {n, std::move(edges)};
}

}  // namespace testsupport

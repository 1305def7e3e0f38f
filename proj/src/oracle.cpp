#include "dualresist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dualresist/errors.hpp"
#include "dualresist/linalg.hpp"
#include "dualresist/resistance.hpp"

namespace dualresist {

namespace {

// Effective resistance of the REAL weighted network with per-edge
// conductances; the independent re-solve behind the finite differences.
double real_effective_resistance(const PerturbedGraph& g, const std::vector<double>& cond,
                                 std::size_t u, std::size_t v) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    Matrix l(n, n);
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const Edge& e = g.edges()[k];
        const auto a = static_cast<std::size_t>(e.i - 1);
        const auto b = static_cast<std::size_t>(e.j - 1);
        const double c = cond[k];
        l(a, a) += c;
        l(b, b) += c;
        l(a, b) -= c;
        l(b, a) -= c;
    }
    const Matrix pinv = real_pinv(l);
    return pinv(u, u) + pinv(v, v) - 2.0 * pinv(u, v);
}

}  // namespace

FDResult finite_difference_resistance(const PerturbedGraph& g, int i, int j,
                                      const std::vector<double>& h_values) {
    if (!is_connected(g)) throw Disconnected("graph is not connected");
    if (i < 1 || i > g.vertex_count() || j < 1 || j > g.vertex_count())
        throw VertexOutOfRange("vertex pair outside 1.." + std::to_string(g.vertex_count()));

    const auto u = static_cast<std::size_t>(i - 1);
    const auto v = static_cast<std::size_t>(j - 1);
    const std::size_t m = g.edges().size();

    FDResult res;
    res.h_values = h_values;
    std::vector<double> cond(m, 1.0);
    const double r0 = real_effective_resistance(g, cond, u, v);

    for (double h : h_values) {
        for (std::size_t k = 0; k < m; ++k) {
            cond[k] = 1.0 + h * g.edges()[k].a_hat;
            if (cond[k] <= 0.0)
                throw NonPositiveConductance("step " + std::to_string(h) +
                                             " drives an edge conductance to " +
                                             std::to_string(cond[k]));
        }
        const double rh = real_effective_resistance(g, cond, u, v);
        res.fd_estimates.push_back((rh - r0) / h);
    }

    if (h_values.empty()) {
        res.extrapolated = 0.0;
    } else if (h_values.size() == 1) {
        res.extrapolated = res.fd_estimates.front();
    } else {
        // Richardson step for an O(h) forward difference, on the two smallest h.
        std::vector<std::size_t> order(h_values.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return h_values[a] < h_values[b]; });
        const double h_small = h_values[order[0]];
        const double h_large = h_values[order[1]];
        const double fd_small = res.fd_estimates[order[0]];
        const double fd_large = res.fd_estimates[order[1]];
        res.extrapolated =
            (h_large * fd_small - h_small * fd_large) / (h_large - h_small);
    }

    res.agreement_error =
        std::abs(res.extrapolated - resistance_mp(g, i, j).infinitesimal);
    return res;
}

TreeCountOracle brute_force_spanning_trees(const PerturbedGraph& g) {
    if (!is_connected(g)) throw Disconnected("graph is not connected");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (n > 10 || m > 20)
        throw TooLarge("enumeration budget is n <= 10 and m <= 20, got n = " +
                       std::to_string(n) + ", m = " + std::to_string(m));

    TreeCountOracle oracle;
    for (const Edge& e : g.edges()) oracle.per_edge[{e.i, e.j}] = 0;
    if (n <= 1) {
        oracle.tau = 1;
        return oracle;
    }

    // All subsets of n-1 edges; acyclic ones with n-1 merges span the graph.
    std::vector<int> pick(static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n - 1; ++k) pick[static_cast<std::size_t>(k)] = k;

    std::vector<int> parent(static_cast<std::size_t>(n));
    const auto find_root = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };

    while (true) {
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
        bool acyclic = true;
        for (int idx : pick) {
            const Edge& e = g.edges()[static_cast<std::size_t>(idx)];
            const int ra = find_root(e.i - 1);
            const int rb = find_root(e.j - 1);
            if (ra == rb) {
                acyclic = false;
                break;
            }
            parent[static_cast<std::size_t>(ra)] = rb;
        }
        if (acyclic) {
            ++oracle.tau;
            for (int idx : pick) {
                const Edge& e = g.edges()[static_cast<std::size_t>(idx)];
                ++oracle.per_edge[{e.i, e.j}];
            }
        }

        // Next combination in lexicographic order.
        int pos = n - 2;
        while (pos >= 0 &&
               pick[static_cast<std::size_t>(pos)] == m - (n - 1) + pos)
            --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int k = pos + 1; k < n - 1; ++k)
            pick[static_cast<std::size_t>(k)] = pick[static_cast<std::size_t>(k - 1)] + 1;
    }
    return oracle;
}

bool one_inverse_member_independence(const PerturbedGraph& g, int trials, unsigned seed) {
    if (!is_connected(g)) throw Disconnected("graph is not connected");
    if (trials <= 0) return true;

    const auto n = static_cast<std::size_t>(g.vertex_count());
    const DualMatrix lw = laplacian(g);
    const DualMatrix mp = dual_laplacian_pinv(g);
    const auto nd = static_cast<double>(n);

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> pick_vertex(1, g.vertex_count());

    std::vector<std::pair<int, int>> pairs;
    if (n >= 2) {
        while (pairs.size() < 5) {
            int a = pick_vertex(rng);
            int b = pick_vertex(rng);
            if (a == b) continue;
            pairs.emplace_back(a, b);
        }
    }

    const auto pair_value = [](const DualMatrix& x, int a, int b) {
        const auto u = static_cast<std::size_t>(a - 1);
        const auto v = static_cast<std::size_t>(b - 1);
        // Part (b) combination; members need not be symmetric.
        return DualScalar(x.standard(u, u) + x.standard(v, v) - x.standard(u, v) -
                              x.standard(v, u),
                          x.infinitesimal(u, u) + x.infinitesimal(v, v) -
                              x.infinitesimal(u, v) - x.infinitesimal(v, u));
    };
    const auto kf_value = [&](const DualMatrix& x) {
        return DualScalar(nd, 0.0) * trace(x) - entry_sum(x);
    };

    std::vector<DualScalar> ref_pairs;
    ref_pairs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) ref_pairs.push_back(pair_value(mp, a, b));
    const DualScalar ref_kf = kf_value(mp);

    const auto random_dual = [&] {
        Matrix s(n, n);
        Matrix d(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                s(r, c) = unit(rng);
                d(r, c) = unit(rng);
            }
        }
        return DualMatrix{std::move(s), std::move(d)};
    };

    constexpr double kTol = 1e-8;
    for (int t = 0; t < trials; ++t) {
        const DualMatrix member = one_inverse_member(lw, mp, random_dual(), random_dual());
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const DualScalar got = pair_value(member, pairs[k].first, pairs[k].second);
            if (std::abs(got.standard - ref_pairs[k].standard) > kTol ||
                std::abs(got.infinitesimal - ref_pairs[k].infinitesimal) > kTol)
                return false;
        }
        const DualScalar kf = kf_value(member);
        if (std::abs(kf.standard - ref_kf.standard) > kTol ||
            std::abs(kf.infinitesimal - ref_kf.infinitesimal) > kTol)
            return false;
    }
    return true;
}

}  // namespace dualresist

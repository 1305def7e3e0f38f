#include "dualresist/graph.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "dualresist/errors.hpp"

namespace dualresist {

namespace {

std::string edge_name(int i, int j) {
    return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

PerturbedGraph::PerturbedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw VertexOutOfRange("vertex count must be nonnegative");
    for (Edge& e : edges_) {
        if (e.i < 1 || e.i > n_ || e.j < 1 || e.j > n_)
            throw VertexOutOfRange("edge " + edge_name(e.i, e.j) +
                                   " references a vertex outside 1.." + std::to_string(n_));
        if (e.i == e.j) throw SelfLoop("self-loop at vertex " + std::to_string(e.i));
        if (e.i > e.j) std::swap(e.i, e.j);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (std::size_t k = 1; k < edges_.size(); ++k)
        if (edges_[k - 1].i == edges_[k].i && edges_[k - 1].j == edges_[k].j)
            throw DuplicateEdge("duplicate edge " + edge_name(edges_[k].i, edges_[k].j));
}

bool PerturbedGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.i == i && e.j == j; });
}

PerturbedGraph PerturbedGraph::unperturbed() const {
    std::vector<Edge> es = edges_;
    for (Edge& e : es) e.a_hat = 0.0;
    return {n_, std::move(es)};
}

PerturbedGraph PerturbedGraph::with_single_perturbation(int i, int j, double a_hat) const {
    if (i > j) std::swap(i, j);
    if (!has_edge(i, j)) throw EdgeNotInGraph("edge " + edge_name(i, j) + " is not in the graph");
    std::vector<Edge> es = edges_;
    for (Edge& e : es) e.a_hat = (e.i == i && e.j == j) ? a_hat : 0.0;
    return {n_, std::move(es)};
}

PerturbedGraph PerturbedGraph::without_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (!has_edge(i, j)) throw EdgeNotInGraph("edge " + edge_name(i, j) + " is not in the graph");
    std::vector<Edge> es;
    es.reserve(edges_.size() - 1);
    for (const Edge& e : edges_)
        if (!(e.i == i && e.j == j)) es.push_back(e);
    return {n_, std::move(es)};
}

DualMatrix laplacian(const PerturbedGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    Matrix l(n, n);
    Matrix lhat(n, n);
    for (const Edge& e : g.edges()) {
        const auto u = static_cast<std::size_t>(e.i - 1);
        const auto v = static_cast<std::size_t>(e.j - 1);
        const DualScalar w = edge_conductance(e.a_hat);
        l(u, u) += w.standard;
        l(v, v) += w.standard;
        l(u, v) -= w.standard;
        l(v, u) -= w.standard;
        lhat(u, u) += w.infinitesimal;
        lhat(v, v) += w.infinitesimal;
        lhat(u, v) -= w.infinitesimal;
        lhat(v, u) -= w.infinitesimal;
    }
    return {std::move(l), std::move(lhat)};
}

bool is_connected(const PerturbedGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.i - 1)].push_back(e.j - 1);
        adj[static_cast<std::size_t>(e.j - 1)].push_back(e.i - 1);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

namespace {

// Exact integer determinant by fraction-free Gaussian elimination.
// Returns nullopt if an intermediate product would overflow 128 bits.
std::optional<__int128> bareiss_determinant(std::vector<std::vector<__int128>> m) {
    const std::size_t n = m.size();
    if (n == 0) return __int128{1};
    __int128 sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return __int128{0};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 a, b;
                if (__builtin_mul_overflow(m[i][j], m[k][k], &a)) return std::nullopt;
                if (__builtin_mul_overflow(m[i][k], m[k][j], &b)) return std::nullopt;
                m[i][j] = (a - b) / prev;  // division is exact
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Laplacian minor of the standard graph (last vertex deleted), integer entries.
std::vector<std::vector<__int128>> integer_laplacian_minor(const PerturbedGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<__int128>> m(n - 1, std::vector<__int128>(n - 1, 0));
    for (const Edge& e : g.edges()) {
        const auto u = static_cast<std::size_t>(e.i - 1);
        const auto v = static_cast<std::size_t>(e.j - 1);
        if (u < n - 1) m[u][u] += 1;
        if (v < n - 1) m[v][v] += 1;
        if (u < n - 1 && v < n - 1) {
            m[u][v] -= 1;
            m[v][u] -= 1;
        }
    }
    return m;
}

std::int64_t matrix_tree_count(const PerturbedGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 1;

    const Matrix minor = delete_row_col(laplacian(g).standard,
                                        static_cast<std::size_t>(n - 1));
    const double det = lu_determinant(minor);

    if (n <= 32) {
        const auto exact = bareiss_determinant(integer_laplacian_minor(g));
        if (exact) {
            if (*exact < 0 || *exact > INT64_MAX)
                throw RoundingGuardFailed("spanning tree count exceeds 64 bits");
            const auto tau = static_cast<std::int64_t>(*exact);
            // The float determinant must agree to rounding accuracy.
            const double drift = std::abs(det - static_cast<double>(tau));
            if (drift > std::max(0.5, 1e-9 * static_cast<double>(tau)))
                throw RoundingGuardFailed("float determinant drifted from the exact count");
            return tau;
        }
    }

    // Float-only route: rounding is meaningful only below 2^53.
    if (std::abs(det) >= 9007199254740992.0)
        throw RoundingGuardFailed("spanning tree determinant too large to round reliably: " +
                                  std::to_string(det));
    const double rounded = std::round(det);
    if (std::abs(det - rounded) >= 0.5)
        throw RoundingGuardFailed("spanning tree determinant is not near an integer: " +
                                  std::to_string(det));
    return static_cast<std::int64_t>(rounded);
}

}  // namespace

std::int64_t spanning_tree_count(const PerturbedGraph& g) {
    if (!is_connected(g)) throw Disconnected("graph is not connected");
    return matrix_tree_count(g);
}

std::int64_t spanning_trees_containing_edge(const PerturbedGraph& g, int i, int j) {
    const std::int64_t tau = spanning_tree_count(g);
    const PerturbedGraph reduced = g.without_edge(i, j);
    const std::int64_t tau_without = is_connected(reduced) ? matrix_tree_count(reduced) : 0;
    return tau - tau_without;
}

}  // namespace dualresist

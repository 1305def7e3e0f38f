#include "dualresist/resistance.hpp"

#include <cstddef>
#include <utility>
#include <vector>

#include "dualresist/errors.hpp"
#include "dualresist/linalg.hpp"

namespace dualresist {

namespace {

void require_connected(const PerturbedGraph& g) {
    if (!is_connected(g)) throw Disconnected("graph is not connected");
}

void require_vertex(const PerturbedGraph& g, int v) {
    if (v < 1 || v > g.vertex_count())
        throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 1.." +
                               std::to_string(g.vertex_count()));
}

// L^+ and L^+ L_hat L^+ from one eigendecomposition.
struct PinvPair {
    Matrix pinv;       // L^+
    Matrix sandwich;   // L^+ L_hat L^+
};

PinvPair laplacian_pinv_parts(const PerturbedGraph& g) {
    const DualMatrix lw = laplacian(g);
    PinvPair parts;
    parts.pinv = real_pinv(lw.standard);
    parts.sandwich = parts.pinv * lw.infinitesimal * parts.pinv;
    return parts;
}

double pair_combination(const Matrix& m, std::size_t u, std::size_t v) {
    return m(u, u) + m(v, v) - 2.0 * m(u, v);
}

// The dual inverse of the leading (n-1) block of L_w under a relabeling that
// sends `last` to position n. Returns the block inverse plus the position of
// `keep` inside it.
struct BlockInverse {
    Matrix inv;       // L_11^-1
    Matrix sandwich;  // L_11^-1 L_hat_11 L_11^-1
    std::size_t keep_index;
};

BlockInverse block_inverse(const PerturbedGraph& g, int keep, int last) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const DualMatrix lw = laplacian(g);

    // Transposition swapping `last` with vertex n (identity when last == n).
    std::vector<std::size_t> perm(n);
    for (std::size_t v = 0; v < n; ++v) perm[v] = v;
    const auto last0 = static_cast<std::size_t>(last - 1);
    std::swap(perm[last0], perm[n - 1]);

    Matrix l11(n - 1, n - 1);
    Matrix lhat11(n - 1, n - 1);
    for (std::size_t a = 0; a < n; ++a) {
        if (perm[a] == n - 1) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (perm[b] == n - 1) continue;
            l11(perm[a], perm[b]) = lw.standard(a, b);
            lhat11(perm[a], perm[b]) = lw.infinitesimal(a, b);
        }
    }

    BlockInverse block;
    auto inv = lu_inverse(l11);
    if (!inv)
        throw SingularStandardPart("Laplacian block of a connected graph failed to invert");
    block.inv = std::move(*inv);
    block.sandwich = block.inv * lhat11 * block.inv;
    block.keep_index = perm[static_cast<std::size_t>(keep - 1)];
    return block;
}

}  // namespace

DualMatrix dual_laplacian_pinv(const PerturbedGraph& g) {
    require_connected(g);
    PinvPair parts = laplacian_pinv_parts(g);
    return {std::move(parts.pinv), -parts.sandwich};
}

ResistanceValue resistance_mp(const PerturbedGraph& g, int i, int j) {
    require_vertex(g, i);
    require_vertex(g, j);
    require_connected(g);
    if (i == j) return {};
    const PinvPair parts = laplacian_pinv_parts(g);
    const auto u = static_cast<std::size_t>(i - 1);
    const auto v = static_cast<std::size_t>(j - 1);
    return {pair_combination(parts.pinv, u, v), -pair_combination(parts.sandwich, u, v)};
}

ResistanceValue resistance_regularized(const PerturbedGraph& g, int i, int j) {
    require_vertex(g, i);
    require_vertex(g, j);
    require_connected(g);
    if (i == j) return {};
    const auto n = static_cast<std::size_t>(g.vertex_count());
    DualMatrix shifted = laplacian(g);
    shifted.standard += Matrix(n, n, 1.0 / static_cast<double>(n));
    const DualMatrix inv = dual_inverse(shifted);
    const auto u = static_cast<std::size_t>(i - 1);
    const auto v = static_cast<std::size_t>(j - 1);
    return {pair_combination(inv.standard, u, v), pair_combination(inv.infinitesimal, u, v)};
}

ResistanceValue resistance_block(const PerturbedGraph& g, int i, int j) {
    require_vertex(g, i);
    require_vertex(g, j);
    require_connected(g);
    if (i == j) return {};
    const BlockInverse block = block_inverse(g, i, j);
    const std::size_t k = block.keep_index;
    return {block.inv(k, k), -block.sandwich(k, k)};
}

DualMatrix resistance_matrix(const PerturbedGraph& g) {
    require_connected(g);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const PinvPair parts = laplacian_pinv_parts(g);
    Matrix rs(n, n);
    Matrix rd(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            rs(u, v) = rs(v, u) = pair_combination(parts.pinv, u, v);
            rd(u, v) = rd(v, u) = -pair_combination(parts.sandwich, u, v);
        }
    }
    return {std::move(rs), std::move(rd)};
}

KirchhoffValue kirchhoff_index(const PerturbedGraph& g, KirchhoffMethod method) {
    require_connected(g);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const auto nd = static_cast<double>(n);

    switch (method) {
        case KirchhoffMethod::trace: {
            const PinvPair parts = laplacian_pinv_parts(g);
            return {nd * trace(parts.pinv), -nd * trace(parts.sandwich)};
        }
        case KirchhoffMethod::one_inverse: {
            if (n < 2) return {};
            // Canonical block {1}-inverse diag(L~_11^-1, 0), pushed through the
            // {1}-inverse family with P = Q = 0.
            const BlockInverse block = block_inverse(g, 1, g.vertex_count());
            Matrix xs(n, n);
            Matrix xd(n, n);
            for (std::size_t a = 0; a + 1 < n; ++a) {
                for (std::size_t b = 0; b + 1 < n; ++b) {
                    xs(a, b) = block.inv(a, b);
                    xd(a, b) = -block.sandwich(a, b);
                }
            }
            const DualMatrix x0{std::move(xs), std::move(xd)};
            const DualMatrix zero{Matrix(n, n)};
            const DualMatrix member = one_inverse_member(laplacian(g), x0, zero, zero);
            const DualScalar kf = DualScalar(nd, 0.0) * trace(member) - entry_sum(member);
            return {kf.standard, kf.infinitesimal};
        }
        case KirchhoffMethod::block: {
            if (n < 2) return {};
            const BlockInverse block = block_inverse(g, 1, g.vertex_count());
            const double std_part = nd * trace(block.inv) - entry_sum(block.inv);
            const double inf_part = -(nd * trace(block.sandwich) - entry_sum(block.sandwich));
            return {std_part, inf_part};
        }
    }
    throw Error("unknown Kirchhoff method");
}

DualVector node_potentials(const PerturbedGraph& g, int source, int sink,
                           DualScalar current) {
    require_vertex(g, source);
    require_vertex(g, sink);
    if (source == sink) throw SameVertex("source and sink must differ");
    if (current.standard <= 0.0)
        throw ValidationError("injected current must have positive standard part");
    require_connected(g);

    const auto n = static_cast<std::size_t>(g.vertex_count());
    DualVector b(n);
    b.standard[static_cast<std::size_t>(source - 1)] = current.standard;
    b.standard[static_cast<std::size_t>(sink - 1)] = -current.standard;
    b.infinitesimal[static_cast<std::size_t>(source - 1)] = current.infinitesimal;
    b.infinitesimal[static_cast<std::size_t>(sink - 1)] = -current.infinitesimal;
    return dual_laplacian_pinv(g) * b;
}

}  // namespace dualresist

#include <doctest.h>

#include <cmath>
#include <random>

#include "dualresist/errors.hpp"
#include "dualresist/linalg.hpp"
#include "support.hpp"

using namespace dualresist;

namespace {

Matrix random_symmetric(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
    return m;
}

Matrix reconstruct(const SpectralDecomposition& eig) {
    const std::size_t n = eig.eigenvalues.size();
    Matrix s(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s(i, j) += eig.eigenvalues[k] * eig.eigenvectors(i, k) *
                           eig.eigenvectors(j, k);
    return s;
}

Matrix laplacian_2x2() {  // path on two vertices
    Matrix l(2, 2);
    l(0, 0) = l(1, 1) = 1.0;
    l(0, 1) = l(1, 0) = -1.0;
    return l;
}

}  // namespace

TEST_CASE("symmetric_eigen on fixed matrices") {
    SUBCASE("zero matrix") {
        const auto eig = symmetric_eigen(Matrix(2, 2));
        CHECK(eig.eigenvalues[0] == 0.0);
        CHECK(eig.eigenvalues[1] == 0.0);
    }
    SUBCASE("K3 Laplacian has spectrum (3, 3, 0)") {
        const auto eig =
            symmetric_eigen(laplacian(testsupport::complete_graph(3)).standard);
        CHECK(eig.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(eig.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(eig.eigenvalues[2] == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("diagonal input is returned as-is") {
        Matrix d(2, 2);
        d(0, 0) = 5.0;
        d(1, 1) = 1.0;
        const auto eig = symmetric_eigen(d);
        CHECK(eig.eigenvalues[0] == 5.0);
        CHECK(eig.eigenvalues[1] == 1.0);
        CHECK(max_abs_diff(eig.eigenvectors, Matrix::identity(2)) == 0.0);
    }
    SUBCASE("asymmetric input is rejected") {
        Matrix bad(2, 2);
        bad(0, 1) = 1.0;
        CHECK_THROWS_AS(symmetric_eigen(bad, 1e-9), NotSymmetric);
    }
    SUBCASE("deterministic repeat") {
        std::mt19937 rng(2);
        const Matrix s = random_symmetric(rng, 6);
        const auto a = symmetric_eigen(s);
        const auto b = symmetric_eigen(s);
        CHECK(max_abs_diff(a.eigenvectors, b.eigenvectors) == 0.0);
        for (std::size_t i = 0; i < 6; ++i) CHECK(a.eigenvalues[i] == b.eigenvalues[i]);
    }
}

TEST_CASE("symmetric_eigen contract on random matrices") {
    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 11);
        const Matrix s = random_symmetric(rng, n);
        const auto eig = symmetric_eigen(s);

        for (std::size_t i = 0; i + 1 < n; ++i)
            CHECK(eig.eigenvalues[i] >= eig.eigenvalues[i + 1]);

        double sum = 0.0;
        for (double lambda : eig.eigenvalues) sum += lambda;
        CHECK(std::abs(sum - trace(s)) <=
              1e-10 * static_cast<double>(n) * std::max(1.0, max_abs(s)));

        const Matrix vt_v = transpose(eig.eigenvectors) * eig.eigenvectors;
        CHECK(frobenius_norm(vt_v - Matrix::identity(n)) <= 1e-12);
        CHECK(frobenius_norm(reconstruct(eig) - s) <= 1e-12 * frobenius_norm(s));
    }
}

TEST_CASE("real_pinv on fixed matrices") {
    const Matrix l = laplacian_2x2();
    const Matrix p = real_pinv(l);
    CHECK(max_abs_diff(p, 0.25 * l) < 1e-14);
    CHECK(max_abs_diff(real_pinv(Matrix::identity(4)), Matrix::identity(4)) < 1e-14);
    CHECK(max_abs(real_pinv(Matrix(3, 3))) == 0.0);
}

TEST_CASE("real_pinv satisfies the four Moore-Penrose axioms") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 9);
        // Singular symmetric input: Laplacians of random connected graphs.
        const Matrix s =
            laplacian(testsupport::random_connected_graph(rng, static_cast<int>(n), 0.5))
                .standard;
        const Matrix p = real_pinv(s);
        CHECK(max_abs_diff(s * p * s, s) < 1e-10);
        CHECK(max_abs_diff(p * s * p, p) < 1e-10);
        CHECK(max_abs_diff(transpose(s * p), s * p) < 1e-10);
        CHECK(max_abs_diff(transpose(p * s), p * s) < 1e-10);
    }
}

TEST_CASE("dual_inverse") {
    SUBCASE("dual identity is its own inverse") {
        const DualMatrix i = DualMatrix::identity(3);
        CHECK(max_abs_diff(dual_inverse(i), i) == 0.0);
    }
    SUBCASE("I + B eps inverts to I - B eps") {
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        Matrix b(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) b(i, j) = u(rng);
        const DualMatrix a{Matrix::identity(4), b};
        const DualMatrix inv = dual_inverse(a);
        CHECK(max_abs_diff(inv.standard, Matrix::identity(4)) < 1e-14);
        CHECK(max_abs_diff(inv.infinitesimal, -1.0 * b) < 1e-14);
    }
    SUBCASE("1x1 conductance inverts to the resistance") {
        const DualMatrix a{Matrix(1, 1, 1.0), Matrix(1, 1, 0.5)};
        const DualMatrix inv = dual_inverse(a);
        CHECK(inv.standard(0, 0) == doctest::Approx(1.0));
        CHECK(inv.infinitesimal(0, 0) == doctest::Approx(-0.5));
    }
    SUBCASE("singular standard part is rejected") {
        const DualMatrix a{Matrix(2, 2), Matrix::identity(2)};
        CHECK_THROWS_AS(dual_inverse(a), SingularStandardPart);
    }
    SUBCASE("product with the inverse is the dual identity") {
        std::mt19937 rng(37);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 1 + static_cast<std::size_t>(t % 7);
            Matrix s(n, n);
            Matrix d(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    s(i, j) = u(rng);
                    d(i, j) = u(rng);
                }
            s += 3.0 * Matrix::identity(n);  // keep A_s well conditioned
            const DualMatrix a{s, d};
            const DualMatrix inv = dual_inverse(a);
            const DualMatrix id = DualMatrix::identity(n);
            CHECK(max_abs_diff(a * inv, id) < 1e-10);
            CHECK(max_abs_diff(inv * a, id) < 1e-10);
        }
    }
}

TEST_CASE("dual_mp_exists") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix any(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) any(i, j) = u(rng);

    CHECK(dual_mp_exists(DualMatrix{any}, 1e-9));  // A_d = 0
    CHECK(dual_mp_exists(DualMatrix{Matrix::identity(3), any}, 1e-9));  // A_s invertible

    // Rank-deficient standard part with an incompatible infinitesimal part:
    // the condition matrix has a 1 in its (2,2) entry.
    Matrix s(2, 2);
    s(0, 0) = 1.0;
    Matrix d(2, 2);
    d(1, 1) = 1.0;
    CHECK_FALSE(dual_mp_exists(DualMatrix{s, d}, 1e-9));
    CHECK_THROWS_AS(dual_pinv(DualMatrix{s, d}), MPDoesNotExist);
}

TEST_CASE("dual_pinv on fixed inputs") {
    SUBCASE("invertible standard part reduces to dual_inverse") {
        std::mt19937 rng(43);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        Matrix b(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) b(i, j) = u(rng);
        const DualMatrix a{Matrix::identity(3), b};
        const DualMatrix p = dual_pinv(a);
        CHECK(max_abs_diff(p.standard, Matrix::identity(3)) < 1e-12);
        CHECK(max_abs_diff(p.infinitesimal, -1.0 * b) < 1e-12);
    }
    SUBCASE("unperturbed P2 Laplacian") {
        const DualMatrix a{laplacian_2x2()};
        const DualMatrix p = dual_pinv(a);
        CHECK(max_abs_diff(p.standard, 0.25 * laplacian_2x2()) < 1e-14);
        CHECK(max_abs(p.infinitesimal) == 0.0);
    }
    SUBCASE("P2 with a_hat = 0.5: L/4 - (L/8) eps") {
        const Matrix l = laplacian_2x2();
        const DualMatrix a{l, 0.5 * l};
        const DualMatrix p = dual_pinv(a);
        CHECK(max_abs_diff(p.standard, 0.25 * l) < 1e-14);
        CHECK(max_abs_diff(p.infinitesimal, -0.125 * l) < 1e-14);
        CHECK(testsupport::mp_axioms_defect(a, p) < 1e-14);
    }
}

TEST_CASE("dual_pinv satisfies the dual MP axioms on random dual Laplacians") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> size(2, 12);
    for (int t = 0; t < 30; ++t) {
        const auto g = testsupport::random_connected_graph(rng, size(rng), 0.5);
        const DualMatrix lw = laplacian(g);
        const DualMatrix p = dual_pinv(lw);
        CHECK(testsupport::mp_axioms_defect(lw, p) <= 1e-9);
    }
}

TEST_CASE("dual_pinv handles rectangular input") {
    std::mt19937 rng(113);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    // Full column rank 4x2 standard part: I - A_s^+ A_s = 0, so the MP
    // inverse exists for every infinitesimal part.
    Matrix s(4, 2);
    s(0, 0) = 1.0;
    s(1, 1) = 1.0;
    s(2, 0) = 0.5;
    s(3, 1) = -2.0;
    Matrix d(4, 2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 2; ++j) d(i, j) = u(rng);
    const DualMatrix a{s, d};
    REQUIRE(dual_mp_exists(a, 1e-9));
    const DualMatrix p = dual_pinv(a);
    CHECK(p.rows() == 2);
    CHECK(p.cols() == 4);
    CHECK(testsupport::mp_axioms_defect(a, p) < 1e-11);
}

TEST_CASE("dual_pinv handles a nonsymmetric standard part") {
    // A_s nilpotent nonsymmetric; existence requires A_d(2,1) = 0.
    Matrix s(2, 2);
    s(0, 1) = 1.0;
    Matrix d(2, 2);
    d(0, 0) = 1.0;
    d(0, 1) = 2.0;
    d(1, 1) = 3.0;
    const DualMatrix a{s, d};
    REQUIRE(dual_mp_exists(a, 1e-9));
    CHECK(testsupport::mp_axioms_defect(a, dual_pinv(a)) < 1e-12);

    d(1, 0) = 1.0;  // now the existence condition fails
    CHECK_FALSE(dual_mp_exists(DualMatrix{s, d}, 1e-9));
}

TEST_CASE("one_inverse_member") {
    const DualMatrix l{laplacian_2x2()};
    SUBCASE("MP inverse with P = Q = 0 reproduces itself") {
        const DualMatrix p = dual_pinv(l);
        const DualMatrix zero{Matrix(2, 2)};
        CHECK(max_abs_diff(one_inverse_member(l, p, zero, zero), p) < 1e-14);
    }
    SUBCASE("invertible A collapses to its inverse for any P, Q") {
        std::mt19937 rng(53);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        Matrix s(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) s(i, j) = u(rng);
        s += 3.0 * Matrix::identity(3);
        const DualMatrix a{s, Matrix(3, 3)};
        const DualMatrix inv = dual_inverse(a);
        Matrix ps(3, 3, 0.3);
        Matrix qs(3, 3, -0.7);
        const DualMatrix member =
            one_inverse_member(a, inv, DualMatrix{ps}, DualMatrix{qs});
        CHECK(max_abs_diff(member, inv) < 1e-10);
    }
    SUBCASE("the block example on P2") {
        Matrix x0s(2, 2);
        x0s(0, 0) = 1.0;
        const DualMatrix x0{x0s};
        const DualMatrix zero{Matrix(2, 2)};
        const DualMatrix member = one_inverse_member(l, x0, zero, zero);
        CHECK(max_abs_diff(member, x0) < 1e-14);
        CHECK(max_abs_diff(l * member * l, l) < 1e-14);
    }
    SUBCASE("a non-{1}-inverse X0 is rejected") {
        const DualMatrix x0 = DualMatrix::identity(2);  // L*I*L = L^2 != L
        const DualMatrix zero{Matrix(2, 2)};
        CHECK_THROWS_AS(one_inverse_member(l, x0, zero, zero), NotAOneInverse);
    }
}

TEST_CASE("one_inverse_member output always satisfies A Y A = A") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> size(2, 10);
    for (int t = 0; t < 20; ++t) {
        const auto g = testsupport::random_connected_graph(rng, size(rng), 0.5);
        const DualMatrix lw = laplacian(g);
        const DualMatrix x0 = dual_pinv(lw);
        const auto n = lw.rows();
        Matrix ps(n, n), pd(n, n), qs(n, n), qd(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ps(i, j) = u(rng);
                pd(i, j) = u(rng);
                qs(i, j) = u(rng);
                qd(i, j) = u(rng);
            }
        const DualMatrix y = one_inverse_member(lw, x0, {ps, pd}, {qs, qd});
        CHECK(max_abs_diff(lw * y * lw, lw) <= 1e-9);
    }
}

TEST_CASE("dual_solve") {
    SUBCASE("identity system") {
        const DualMatrix a = DualMatrix::identity(3);
        DualVector b(3);
        b.standard = {1.0, -2.0, 0.5};
        b.infinitesimal = {0.0, 1.0, -1.0};
        const SolveResult res = dual_solve(a, b, a);
        CHECK(res.solvable);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(res.particular.standard[i] == b.standard[i]);
            CHECK(res.particular.infinitesimal[i] == b.infinitesimal[i]);
        }
        CHECK(max_abs(res.projector) == 0.0);
    }
    SUBCASE("inconsistent system is flagged") {
        Matrix s(2, 2);
        s(0, 0) = 1.0;
        const DualMatrix a{s};
        DualVector b(2);
        b.standard = {0.0, 1.0};  // second equation reads 0 = 1
        const SolveResult res = dual_solve(a, b, dual_pinv(a));
        CHECK_FALSE(res.solvable);
    }
    SUBCASE("dual Laplacian system on P2 with a_hat = 0.5") {
        const Matrix l = laplacian_2x2();
        const DualMatrix a{l, 0.5 * l};
        DualVector b(2);
        b.standard = {1.0, -1.0};
        const SolveResult res = dual_solve(a, b, dual_pinv(a));
        REQUIRE(res.solvable);
        CHECK(res.particular.standard[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(res.particular.standard[1] == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(res.particular.infinitesimal[0] == doctest::Approx(-0.25).epsilon(1e-12));
        CHECK(res.particular.infinitesimal[1] == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("every particular + projector*u solves a solvable system") {
        std::mt19937 rng(61);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const auto g = testsupport::random_connected_graph(rng, 7, 0.6);
        const DualMatrix a = laplacian(g);
        const DualMatrix x0 = dual_pinv(a);
        const auto n = a.rows();
        // Right-hand side in the column space: b = A*w.
        DualVector w(n);
        for (std::size_t i = 0; i < n; ++i) {
            w.standard[i] = u(rng);
            w.infinitesimal[i] = u(rng);
        }
        const DualVector b = a * w;
        const SolveResult res = dual_solve(a, b, x0);
        REQUIRE(res.solvable);
        for (int trial = 0; trial < 20; ++trial) {
            DualVector uu(n);
            for (std::size_t i = 0; i < n; ++i) {
                uu.standard[i] = u(rng);
                uu.infinitesimal[i] = u(rng);
            }
            const DualVector x = res.particular + res.projector * uu;
            CHECK(max_abs(a * x - b) <= 1e-9);
        }
    }
}

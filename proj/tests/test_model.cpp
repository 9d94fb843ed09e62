#include "doctest.h"

#include "kz/model.hpp"

using namespace kz;

namespace {

MatrixR from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size(), c = rows.begin()->size();
    MatrixR m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("KZSystem validation") {
    CHECK_NOTHROW(KZSystem(3, {Rational(0), Rational(1)}, -1));
    CHECK_THROWS_AS(KZSystem(2, {Rational(0)}, -1), input_error);
    CHECK_THROWS_AS(KZSystem(3, {Rational(0), Rational(1)}, 2), input_error);
    CHECK_THROWS_AS(KZSystem(3, {Rational(0)}, -1), input_error);
    try {
        KZSystem(3, {Rational(1, 2), Rational(1, 2)}, -1);
        CHECK(false);
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("indices 1,2") != std::string::npos);
    }
}

TEST_CASE("transposition matrices") {
    CHECK(perm_matrix(3, 1, 2) == from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    for (int n = 3; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const MatrixR p = perm_matrix(n, i, j);
                CHECK(p == perm_matrix(n, j, i));
                CHECK(mat_mul(p, p) == MatrixR::identity(static_cast<std::size_t>(n)));
                CHECK(p == p.transpose());
            }
    CHECK_THROWS_AS(perm_matrix(3, 1, 1), input_error);
    CHECK_THROWS_AS(perm_matrix(3, 0, 2), input_error);
    CHECK_THROWS_AS(perm_matrix(3, 1, 4), input_error);
}

TEST_CASE("pole matrices P_k") {
    CHECK(p_k(3, 1) == from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK(p_k(3, 2) == from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            const MatrixR p = p_k(n, k);
            CHECK(p == p.transpose()); // symmetry needed by the inverse-transpose route
        }
    CHECK_THROWS_AS(p_k(3, 0), input_error);
    CHECK_THROWS_AS(p_k(3, 3), input_error);
}

TEST_CASE("T matrix") {
    CHECK(t_matrix(3) == from_rows({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
    CHECK(t_matrix(4) == from_rows({{0, 1, 1, 1}, {1, 2, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}}));
    // Construction cross-checks the bordered closed form internally.
    for (int n = 3; n <= 8; ++n) CHECK_NOTHROW(t_matrix(n));
    for (int n = 3; n <= 8; ++n) {
        const SpectralData d = spectral_data(n);
        CHECK(mat_mul(t_matrix(n), d.v1) == d.v1 * Rational(n - 1));
    }
}

TEST_CASE("power-weighted sums T_p") {
    const KZSystem sys(3, {Rational(0), Rational(1)}, -1);
    CHECK(t_coeff(sys, 0) == p_k(3, 2)); // z_1 = 0 kills the first term
    CHECK(t_coeff(sys, 1) == p_k(3, 2)); // z_2^2 = 1
    CHECK_THROWS_AS(t_coeff(sys, -1), input_error);

    // Scalar factoring identity on a degenerate point set.
    const Rational c(3, 2);
    const std::vector<Rational> equal{c, c, c};
    CHECK(t_coeff_raw(4, equal, 1) == t_matrix(4) * c.pow(2));
}

TEST_CASE("coefficient matrix A(z)") {
    const KZSystem sys(3, {Rational(0), Rational(1)}, -1);
    const MatrixF a = a_matrix(sys);
    const RationalFunction inv_z = RationalFunction::simple_pole(Rational(0));
    const RationalFunction inv_zm1 = RationalFunction::simple_pole(Rational(1));
    CHECK(a(0, 1) == inv_z);
    CHECK(a(1, 1) == inv_zm1);
    CHECK(a(0, 0).is_zero());

    // Every row sums to sum_k 1/(z - z_k).
    const RationalFunction expected = inv_z + inv_zm1;
    for (std::size_t i = 0; i < 3; ++i) {
        RationalFunction row_sum;
        for (std::size_t j = 0; j < 3; ++j) row_sum = row_sum + a(i, j);
        CHECK(row_sum == expected);
    }

    // Residue extraction: (z - z_k) A(z) at z_k equals P_k.
    const KZSystem sys4(4, {Rational(0), Rational(1, 2), Rational(-3)}, -1);
    const MatrixF a4 = a_matrix(sys4);
    for (int k = 1; k <= 3; ++k) {
        const Rational zk = sys4.points[static_cast<std::size_t>(k) - 1];
        const RationalFunction lin(Polynomial(std::vector<Rational>{-zk, Rational(1)}));
        MatrixR residue(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) residue(i, j) = (a4(i, j) * lin).eval(zk);
        CHECK(residue == p_k(4, k));
    }
}

TEST_CASE("spectral data") {
    const SpectralData d3 = spectral_data(3);
    CHECK(d3.v3 == column({2, -1, -1}));
    CHECK(d3.lambda1 == Rational(2));
    CHECK(d3.lambda2 == Rational(1));
    CHECK(d3.lambda3 == Rational(-1));

    const SpectralData d4 = spectral_data(4);
    CHECK(d4.n_vectors[0] == column({1, 1, -1, -1})); // -2/(n-2) = -1 here

    for (int n = 3; n <= 8; ++n) {
        const SpectralData d = spectral_data(n);
        const MatrixR t = t_matrix(n);
        CHECK(mat_mul(t, d.v1) == d.v1 * d.lambda1);
        CHECK(mat_mul(t, d.v3) == d.v3 * d.lambda3);
        CHECK(static_cast<int>(d.v2_basis.size()) == n - 2);
        for (const auto& v : d.v2_basis) CHECK(mat_mul(t, v) == v * d.lambda2);

        MatrixR sum(static_cast<std::size_t>(n), 1);
        for (const auto& nv : d.n_vectors) sum = sum + nv;
        CHECK(sum == d.v3);

        for (int k = 1; k <= n - 1; ++k)
            for (int s = 1; s <= n - 1; ++s)
                CHECK(mat_mul(p_k(n, k), d.n_vectors[static_cast<std::size_t>(s) - 1]) ==
                      mat_mul(p_k(n, s), d.n_vectors[static_cast<std::size_t>(k) - 1]));
    }
}

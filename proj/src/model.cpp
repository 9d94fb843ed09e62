#include "kz/model.hpp"

#include <string>

namespace kz {

KZSystem::KZSystem(int n_, std::vector<Rational> points_, int rho_)
    : n(n_), points(std::move(points_)), rho(rho_) {
    if (n < 3) throw input_error("n must be at least 3 (got " + std::to_string(n) + ")");
    if (rho != 1 && rho != -1) throw input_error("rho must be +1 or -1");
    if (static_cast<int>(points.size()) != n - 1)
        throw input_error("expected " + std::to_string(n - 1) + " points, got " +
                          std::to_string(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw input_error("points must be pairwise distinct (indices " +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

MatrixR perm_matrix(int n, int i, int j) {
    if (n < 1 || i < 1 || j < 1 || i > n || j > n)
        throw input_error("perm_matrix: index out of range");
    if (i == j) throw input_error("perm_matrix: i and j must differ");
    MatrixR p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    const std::size_t a = static_cast<std::size_t>(i) - 1, b = static_cast<std::size_t>(j) - 1;
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
        if (k == a || k == b) continue;
        p(k, k) = Rational(1);
    }
    p(a, b) = Rational(1);
    p(b, a) = Rational(1);
    return p;
}

MatrixR p_k(int n, int k) {
    if (k < 1 || k > n - 1) throw input_error("p_k: k must lie in 1..n-1");
    return perm_matrix(n, 1, k + 1);
}

MatrixR t_matrix(int n) {
    if (n < 3) throw input_error("t_matrix: n must be at least 3");
    MatrixR t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int k = 1; k <= n - 1; ++k) t = t + p_k(n, k);

    // Bordered closed form: (n-2) I + [[2-n, e], [e^T, 0]].
    MatrixR s(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    s(0, 0) = Rational(2 - n);
    for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j) {
        s(0, j) = Rational(1);
        s(j, 0) = Rational(1);
    }
    MatrixR closed = MatrixR::identity(static_cast<std::size_t>(n)) * Rational(n - 2) + s;
    if (t != closed) throw internal_error("t_matrix: sum of transpositions disagrees with closed form");
    return t;
}

MatrixR t_coeff_raw(int n, const std::vector<Rational>& points, int p) {
    if (p < 0) throw input_error("t_coeff: p must be >= 0");
    if (static_cast<int>(points.size()) != n - 1)
        throw input_error("t_coeff: expected n-1 points");
    MatrixR t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int k = 1; k <= n - 1; ++k)
        t = t + p_k(n, k) * points[static_cast<std::size_t>(k) - 1].pow(static_cast<unsigned>(p) + 1);
    return t;
}

MatrixR t_coeff(const KZSystem& sys, int p) { return t_coeff_raw(sys.n, sys.points, p); }

MatrixF a_matrix(const KZSystem& sys) {
    const std::size_t n = static_cast<std::size_t>(sys.n);
    MatrixF a(n, n);
    for (int k = 1; k <= sys.n - 1; ++k) {
        const MatrixR pk = p_k(sys.n, k);
        const RationalFunction pole = RationalFunction::simple_pole(sys.points[static_cast<std::size_t>(k) - 1]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!pk(i, j).is_zero()) a(i, j) = a(i, j) + pole;
    }
    return a;
}

SpectralData spectral_data(int n) {
    if (n < 3) throw input_error("spectral_data: n must be at least 3");
    const std::size_t un = static_cast<std::size_t>(n);
    SpectralData d{Rational(n - 1), Rational(n - 2), Rational(-1),
                   MatrixR(un, 1),  {},              MatrixR(un, 1),
                   {}};
    for (std::size_t i = 0; i < un; ++i) d.v1(i, 0) = Rational(1);
    d.v3(0, 0) = Rational(n - 1);
    for (std::size_t i = 1; i < un; ++i) d.v3(i, 0) = Rational(-1);

    for (int i = 1; i <= n - 2; ++i) {
        MatrixR v(un, 1);
        v(static_cast<std::size_t>(i), 0) = Rational(1);
        v(static_cast<std::size_t>(i) + 1, 0) = Rational(-1);
        d.v2_basis.push_back(std::move(v));
    }

    const Rational fill = Rational(-2) / Rational(n - 2);
    for (int i = 1; i <= n - 1; ++i) {
        MatrixR v(un, 1);
        for (std::size_t j = 0; j < un; ++j) v(j, 0) = fill;
        v(0, 0) = Rational(1);
        v(static_cast<std::size_t>(i), 0) = Rational(1);
        d.n_vectors.push_back(std::move(v));
    }
    return d;
}

} // namespace kz

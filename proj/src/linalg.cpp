#include "kz/linalg.hpp"

#include <string>

namespace kz {

namespace {

// Reduced row echelon form in place. Returns, per pivot row, the pivot
// column index.
std::vector<std::size_t> rref(MatrixR& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rational inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Solves a x = b for nonsingular square a, multiple right-hand sides.
MatrixR solve_nonsingular(const MatrixR& a, const MatrixR& b) {
    const std::size_t n = a.rows();
    MatrixR aug(n, n + b.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw singular_matrix_error("exact solve hit a singular system");
    MatrixR x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
    return x;
}

bool is_symmetric(const MatrixR& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a(i, j) != a(j, i)) return false;
    return true;
}

struct Cleared {
    MatrixP num;
    Polynomial den; // monic lcm of all entry denominators
};

Cleared clear_denominators(const MatrixF& a) {
    Polynomial d(Rational(1));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) d = lcm(d, a(i, j).den());
    MatrixP num(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            num(i, j) = a(i, j).num() * d.exact_div(a(i, j).den());
    return {std::move(num), std::move(d)};
}

} // namespace

MatrixR mat_mul(const MatrixR& a, const MatrixR& b) { return mul_serial(a, b); }

MatrixF mat_mul(const MatrixF& a, const MatrixF& b) { return par::mul(a, b); }

Rational determinant(const MatrixR& a) {
    if (!a.is_square()) throw dimension_error("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);
    MatrixR m = a;
    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t s = k + 1;
            while (s < n && m(s, k).is_zero()) ++s;
            if (s == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = Rational(0);
        }
        prev = m(k, k);
        if (prev.is_zero()) return Rational(0);
    }
    Rational d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

RationalFunction determinant(const MatrixF& a) {
    if (!a.is_square()) throw dimension_error("determinant of a non-square matrix");
    if (a.rows() == 0) return RationalFunction(Rational(1));
    auto [num, den] = clear_denominators(a);
    return RationalFunction(par::det(std::move(num)), pow(den, static_cast<unsigned>(a.rows())));
}

MatrixF inverse(const MatrixF& a) {
    if (!a.is_square()) throw dimension_error("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return a;
    auto [num, den] = clear_denominators(a);
    Polynomial det_num = par::det(num);
    if (det_num.is_zero())
        throw singular_matrix_error("matrix has identically zero determinant");
    MatrixP cof = par::cofactor_matrix(num);
    MatrixF inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = RationalFunction(den * cof(j, i), det_num);
    return inv;
}

SolveReport solve_singular(const MatrixR& a, const MatrixR& b) {
    if (!a.is_square()) throw dimension_error("solve_singular needs a square operator");
    if (b.rows() != a.rows() || b.cols() != 1)
        throw dimension_error("solve_singular needs a conforming column right-hand side");
    const std::size_t n = a.rows();
    MatrixR aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b(i, 0);
    }
    const auto pivots = rref(aug);

    SolveReport report;
    report.solvable = pivots.empty() || pivots.back() != n;

    std::vector<bool> is_pivot_col(n, false);
    for (std::size_t c : pivots)
        if (c < n) is_pivot_col[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot_col[f]) continue;
        MatrixR k(n, 1);
        k(f, 0) = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < n) k(pivots[r], 0) = -aug(r, f);
        report.kernel_basis.push_back(std::move(k));
    }

    if (report.solvable) {
        MatrixR x(n, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < n) x(pivots[r], 0) = aug(r, n);
        // Deterministic representative: for the symmetric operators this
        // artifact meets (polynomials in T) the kernel is a sum of
        // T-eigenspaces, and orthogonal pinning zeroes exactly those
        // eigen-coordinates.
        if (!report.kernel_basis.empty() && is_symmetric(a))
            x = project_off_span(x, report.kernel_basis);
        report.particular = std::move(x);
    }
    return report;
}

MatrixR project_off_span(const MatrixR& x, const std::vector<MatrixR>& basis) {
    if (basis.empty()) return x;
    const std::size_t k = basis.size();
    MatrixR gram(k, k), rhs(k, 1);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
        rhs(i, 0) = dot(basis[i], x);
    }
    MatrixR c = solve_nonsingular(gram, rhs);
    MatrixR r = x;
    for (std::size_t i = 0; i < k; ++i) r = r - basis[i] * c(i, 0);
    return r;
}

std::vector<MatrixR> vandermonde_residues(const std::vector<Rational>& points,
                                          const std::vector<MatrixR>& moments) {
    const std::size_t m = points.size();
    if (m == 0) throw input_error("vandermonde_residues: no points");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i] == points[j])
                throw input_error("vandermonde_residues: repeated points (indices " +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    if (moments.size() != m)
        throw input_error("vandermonde_residues: expected " + std::to_string(m) + " moments");
    const std::size_t rows = moments[0].rows(), cols = moments[0].cols();
    for (const auto& g : moments)
        if (g.rows() != rows || g.cols() != cols)
            throw dimension_error("vandermonde_residues: moment shapes differ");

    MatrixR vand(m, m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t k = 0; k < m; ++k) vand(p, k) = points[k].pow(static_cast<unsigned>(p));

    // One scalar solve covers every coordinate: stack the moment entries
    // as right-hand-side columns.
    MatrixR rhs(m, rows * cols);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) rhs(p, i * cols + j) = moments[p](i, j);
    MatrixR sol = solve_nonsingular(vand, rhs);

    std::vector<MatrixR> residues(m, MatrixR(rows, cols));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) residues[k](i, j) = sol(k, i * cols + j);
    return residues;
}

} // namespace kz

#include "kz/builder.hpp"

#include <string>

namespace kz {

namespace {

void require_minus_one(const KZSystem& sys, const char* who) {
    if (sys.rho != -1) throw input_error(std::string(who) + ": construction requires rho = -1");
}

// Series seeded with zeros from G_{-1} up to (excluding) `first`, then the
// given coefficient at index `first`.
SeriesCoefficients seeded_series(int n, int first, const MatrixR& g) {
    SeriesCoefficients s;
    for (int p = -1; p < first; ++p) s.set(p, MatrixR(static_cast<std::size_t>(n), 1));
    s.set(first, g);
    return s;
}

std::vector<MatrixR> moments_from_series(const SeriesCoefficients& s, int n) {
    std::vector<MatrixR> m;
    m.reserve(static_cast<std::size_t>(n) - 1);
    for (int p = 1; p <= n - 1; ++p) m.push_back(s.at(p));
    return m;
}

} // namespace

PartialFractionSolution build_y1(const KZSystem& sys) {
    require_minus_one(sys, "build_y1");
    const SpectralData sd = spectral_data(sys.n);
    SeriesCoefficients s = seeded_series(sys.n, sys.n - 1, sd.v1);
    PartialFractionSolution sol;
    sol.points = sys.points;
    sol.residues = vandermonde_residues(sys.points, moments_from_series(s, sys.n));
    return sol;
}

PartialFractionSolution build_yj(const KZSystem& sys, int j) {
    require_minus_one(sys, "build_yj");
    if (j < 2 || j > sys.n - 1)
        throw input_error("build_yj: j must lie in 2..n-1, got " + std::to_string(j));
    SeriesCoefficients s = seeded_series(sys.n, sys.n - 2, yj_seed(sys.n, j));
    extend_series(sys, s, sys.n - 1);
    PartialFractionSolution sol;
    sol.points = sys.points;
    sol.residues = vandermonde_residues(sys.points, moments_from_series(s, sys.n));
    return sol;
}

PartialFractionSolution build_yn_recurrence(const KZSystem& sys) {
    require_minus_one(sys, "build_yn");
    const SpectralData sd = spectral_data(sys.n);
    SeriesCoefficients s;
    s.set(-1, sd.v3);
    extend_series(sys, s, sys.n - 1);
    PartialFractionSolution sol;
    sol.points = sys.points;
    sol.residues = vandermonde_residues(sys.points, moments_from_series(s, sys.n));
    sol.poly_part = {s.at(0), s.at(-1)};
    return sol;
}

PartialFractionSolution build_yn(const KZSystem& sys) { return build_yn_recurrence(sys); }

FundamentalSolution build_fundamental(const KZSystem& sys) {
    require_minus_one(sys, "build_fundamental");
    FundamentalSolution fund;
    fund.rho = -1;
    fund.columns.assign(static_cast<std::size_t>(sys.n), PartialFractionSolution{});
    // The n column builds are independent.
    parallel_for(static_cast<std::size_t>(sys.n), [&](std::size_t idx) {
        const int j = static_cast<int>(idx) + 1;
        if (j == 1)
            fund.columns[idx] = build_y1(sys);
        else if (j == sys.n)
            fund.columns[idx] = build_yn(sys);
        else
            fund.columns[idx] = build_yj(sys, j);
    });
    if (determinant(to_matrix(fund)).is_zero())
        throw internal_error("fundamental assembly produced a singular matrix");
    return fund;
}

MatrixF rho_plus_fundamental(const KZSystem& sys) {
    const KZSystem minus(sys.n, sys.points, -1);
    const MatrixF w = to_matrix(build_fundamental(minus));
    return inverse(w).transpose();
}

MatrixR evaluate(const PartialFractionSolution& sol, const Rational& z0) {
    for (const auto& zk : sol.points)
        if (zk == z0) throw pole_error(z0.to_string());
    if (sol.residues.empty()) throw error("evaluate: empty solution");
    MatrixR acc(sol.residues[0].rows(), sol.residues[0].cols());
    for (std::size_t k = 0; k < sol.residues.size(); ++k)
        acc = acc + sol.residues[k] * (z0 - sol.points[k]).inverse();
    Rational zpow(1);
    for (const auto& q : sol.poly_part) {
        acc = acc + q * zpow;
        zpow *= z0;
    }
    return acc;
}

MatrixR evaluate(const FundamentalSolution& sol, const Rational& z0) {
    if (sol.columns.empty()) throw error("evaluate: empty fundamental solution");
    const std::size_t n = sol.columns[0].residues[0].rows();
    MatrixR m(n, sol.columns.size());
    for (std::size_t j = 0; j < sol.columns.size(); ++j)
        m.set_col(j, evaluate(sol.columns[j], z0));
    return m;
}

MatrixF to_matrix(const PartialFractionSolution& sol) {
    if (sol.residues.empty()) throw error("to_matrix: empty solution");
    const std::size_t rows = sol.residues[0].rows(), cols = sol.residues[0].cols();
    MatrixF m(rows, cols);
    for (std::size_t k = 0; k < sol.residues.size(); ++k) {
        const RationalFunction pole = RationalFunction::simple_pole(sol.points[k]);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!sol.residues[k](i, j).is_zero())
                    m(i, j) = m(i, j) + pole * RationalFunction(sol.residues[k](i, j));
    }
    for (std::size_t q = 0; q < sol.poly_part.size(); ++q)
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!sol.poly_part[q](i, j).is_zero())
                    m(i, j) = m(i, j) +
                              RationalFunction(Polynomial::monomial(sol.poly_part[q](i, j),
                                                                    static_cast<unsigned>(q)));
    return m;
}

MatrixF to_matrix(const FundamentalSolution& sol) {
    if (sol.columns.empty()) throw error("to_matrix: empty fundamental solution");
    const std::size_t n = sol.columns[0].residues[0].rows();
    MatrixF m(n, sol.columns.size());
    for (std::size_t j = 0; j < sol.columns.size(); ++j) {
        const MatrixF colm = to_matrix(sol.columns[j]);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = colm(i, 0);
    }
    return m;
}

PartialFractionSolution merge_columns(const FundamentalSolution& sol) {
    if (sol.columns.empty()) throw error("merge_columns: empty fundamental solution");
    const std::size_t n = sol.columns[0].residues[0].rows();
    const std::size_t ncols = sol.columns.size();
    const std::size_t npoles = sol.columns[0].residues.size();
    PartialFractionSolution merged;
    merged.points = sol.columns[0].points;
    merged.residues.assign(npoles, MatrixR(n, ncols));
    std::size_t max_deg = 0;
    for (const auto& c : sol.columns) max_deg = std::max(max_deg, c.poly_part.size());
    merged.poly_part.assign(max_deg, MatrixR(n, ncols));
    for (std::size_t j = 0; j < ncols; ++j) {
        for (std::size_t k = 0; k < npoles; ++k)
            merged.residues[k].set_col(j, sol.columns[j].residues[k]);
        for (std::size_t q = 0; q < sol.columns[j].poly_part.size(); ++q)
            merged.poly_part[q].set_col(j, sol.columns[j].poly_part[q]);
    }
    while (!merged.poly_part.empty() && merged.poly_part.back().is_zero())
        merged.poly_part.pop_back();
    return merged;
}

std::optional<PartialFractionSolution> to_partial_fractions(
    const MatrixF& w, const std::vector<Rational>& points) {
    Polynomial allowed(Rational(1));
    for (const auto& zk : points)
        allowed = allowed * Polynomial(std::vector<Rational>{-zk, Rational(1)});
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            if (!divides(w(i, j).den(), allowed)) return std::nullopt;

    PartialFractionSolution sol;
    sol.points = points;
    MatrixF remainder = w;
    for (const auto& zk : points) {
        const RationalFunction lin(Polynomial(std::vector<Rational>{-zk, Rational(1)}));
        MatrixR res(w.rows(), w.cols());
        for (std::size_t i = 0; i < w.rows(); ++i)
            for (std::size_t j = 0; j < w.cols(); ++j) res(i, j) = (w(i, j) * lin).eval(zk);
        sol.residues.push_back(res);
        const RationalFunction pole = RationalFunction::simple_pole(zk);
        for (std::size_t i = 0; i < w.rows(); ++i)
            for (std::size_t j = 0; j < w.cols(); ++j)
                remainder(i, j) = remainder(i, j) - RationalFunction(res(i, j)) * pole;
    }
    int max_deg = -1;
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) {
            if (!remainder(i, j).is_polynomial()) return std::nullopt; // cannot happen after the divides check
            max_deg = std::max(max_deg, remainder(i, j).num().degree_or_minus1());
        }
    for (int q = 0; q <= max_deg; ++q) {
        MatrixR c(w.rows(), w.cols());
        for (std::size_t i = 0; i < w.rows(); ++i)
            for (std::size_t j = 0; j < w.cols(); ++j)
                c(i, j) = remainder(i, j).num().coeff(static_cast<unsigned>(q));
        sol.poly_part.push_back(std::move(c));
    }
    return sol;
}

Rational inverse_vandermonde_last_row(const std::vector<Rational>& points, int k) {
    const int m = static_cast<int>(points.size());
    if (k < 1 || k > m) throw input_error("inverse_vandermonde_last_row: k out of range");
    Rational denom(1);
    for (int i = k + 1; i <= m; ++i)
        denom *= points[static_cast<std::size_t>(i) - 1] - points[static_cast<std::size_t>(k) - 1];
    for (int j = 1; j < k; ++j)
        denom *= points[static_cast<std::size_t>(k) - 1] - points[static_cast<std::size_t>(j) - 1];
    // Sign (-1)^{n+k-1} with n = m + 1.
    const bool negative = ((m + 1 + k - 1) % 2) != 0;
    Rational alpha = denom.inverse();
    return negative ? -alpha : alpha;
}

MatrixR yj_seed(int n, int j) {
    if (j < 2 || j > n - 1) throw input_error("yj_seed: j must lie in 2..n-1");
    MatrixR g(static_cast<std::size_t>(n), 1);
    g(static_cast<std::size_t>(j) - 1, 0) = Rational(1);
    g(static_cast<std::size_t>(n) - 1, 0) = g(static_cast<std::size_t>(n) - 1, 0) + Rational(-1);
    return g;
}

MatrixR yj_penultimate_closed(const KZSystem& sys, int j) {
    const int n = sys.n;
    const SpectralData sd = spectral_data(n);
    const MatrixR seed = yj_seed(n, j);
    Rational point_sum(0);
    for (const auto& z : sys.points) point_sum += z;
    Rational m(0);
    for (int i = 1; i <= n - 1; ++i)
        m += seed(static_cast<std::size_t>(i), 0) * sys.points[static_cast<std::size_t>(i) - 1];
    MatrixR g(static_cast<std::size_t>(n), 1);
    const Rational m_over = m / Rational(n - 1);
    for (int kk = 1; kk <= n - 1; ++kk) {
        const Rational mk = seed(static_cast<std::size_t>(kk), 0) *
                            (point_sum - sys.points[static_cast<std::size_t>(kk) - 1]);
        g(static_cast<std::size_t>(kk), 0) = mk + m_over; // b_k
    }
    return sd.v3 * (m / Rational(static_cast<long>(n) * (n - 1))) + g;
}

std::vector<MatrixR> y1_closed_residues(const KZSystem& sys) {
    const SpectralData sd = spectral_data(sys.n);
    std::vector<MatrixR> res;
    for (int k = 1; k <= sys.n - 1; ++k)
        res.push_back(sd.v1 * inverse_vandermonde_last_row(sys.points, k));
    return res;
}

std::vector<MatrixR> yj_closed_residues(const KZSystem& sys, int j) {
    const MatrixR seed = yj_seed(sys.n, j);
    const MatrixR penult = yj_penultimate_closed(sys, j);
    Rational point_sum(0);
    for (const auto& z : sys.points) point_sum += z;
    std::vector<MatrixR> res;
    for (int k = 1; k <= sys.n - 1; ++k) {
        const Rational alpha = inverse_vandermonde_last_row(sys.points, k);
        const Rational other = point_sum - sys.points[static_cast<std::size_t>(k) - 1];
        res.push_back((penult - seed * other) * alpha);
    }
    return res;
}

MatrixR yn_g0(const KZSystem& sys) {
    const SpectralData sd = spectral_data(sys.n);
    MatrixR acc(static_cast<std::size_t>(sys.n), 1);
    for (int i = 1; i <= sys.n - 1; ++i)
        acc = acc + sd.n_vectors[static_cast<std::size_t>(i) - 1] *
                        sys.points[static_cast<std::size_t>(i) - 1];
    return -acc;
}

Rational residue_direction_coeff(int n, int p, int k, int l) {
    if (n < 4) throw input_error("residue_direction_coeff: defined for n >= 4");
    if (p == k || p == l) return Rational(-1, n - 2);
    return Rational(1) / Rational(static_cast<long>(n - 2) * (n - 3));
}

MatrixR yn_g1_closed(const KZSystem& sys) {
    const int n = sys.n;
    if (n < 4) throw input_error("yn_g1_closed: defined for n >= 4");
    const SpectralData sd = spectral_data(n);
    const Rational u0_scale = Rational(-2) / Rational(static_cast<long>(n - 1) * (n - 2));
    const Rational off = Rational(-2 * static_cast<long>(n)) /
                         Rational(static_cast<long>(n - 2) * (n - 1));
    const Rational on = Rational(static_cast<long>(n) * (n - 3)) /
                        Rational(static_cast<long>(n - 2) * (n - 1));
    const Rational v2_scale = Rational(1) / Rational(3 - n);
    MatrixR g1(static_cast<std::size_t>(n), 1);
    for (int k = 2; k <= n - 1; ++k) {
        for (int l = 1; l < k; ++l) {
            const Rational weight =
                (sys.points[static_cast<std::size_t>(k) - 1] -
                 sys.points[static_cast<std::size_t>(l) - 1])
                    .pow(2);
            MatrixR contrib = sd.v3 * (u0_scale / Rational(2));
            for (int p = 1; p <= n - 1; ++p) {
                const Rational a = (p == k || p == l) ? on : off;
                contrib(static_cast<std::size_t>(p), 0) =
                    contrib(static_cast<std::size_t>(p), 0) + a * v2_scale;
            }
            g1 = g1 + contrib * weight;
        }
    }
    return g1;
}

std::vector<Rational> yn_gamma(const KZSystem& sys) {
    const int n = sys.n;
    if (n < 4) throw input_error("yn_gamma: defined for n >= 4");
    std::vector<Rational> gamma(static_cast<std::size_t>(n) - 1, Rational(0));
    for (int k = 2; k <= n - 1; ++k)
        for (int l = 1; l < k; ++l) {
            const Rational weight =
                (sys.points[static_cast<std::size_t>(k) - 1] -
                 sys.points[static_cast<std::size_t>(l) - 1])
                    .pow(2);
            for (int s = 1; s <= n - 1; ++s)
                gamma[static_cast<std::size_t>(s) - 1] +=
                    weight * residue_direction_coeff(n, s, k, l);
        }
    return gamma;
}

std::vector<MatrixR> yn_closed_residues(const KZSystem& sys) {
    const SpectralData sd = spectral_data(sys.n);
    const std::vector<Rational> gamma = yn_gamma(sys);
    std::vector<MatrixR> res;
    for (std::size_t s = 0; s < gamma.size(); ++s)
        res.push_back(sd.n_vectors[s] * gamma[s]);
    return res;
}

} // namespace kz

#include "kz/series.hpp"

#include <string>

namespace kz {

const MatrixR& SeriesCoefficients::at(int p) const {
    auto it = entries_.find(p);
    if (it == entries_.end())
        throw error("series coefficient G_" + std::to_string(p) + " is missing");
    return it->second;
}

int SeriesCoefficients::min_index() const {
    if (entries_.empty()) throw error("empty coefficient series");
    return entries_.begin()->first;
}

int SeriesCoefficients::max_index() const {
    if (entries_.empty()) throw error("empty coefficient series");
    return entries_.rbegin()->first;
}

std::optional<int> SeriesCoefficients::first_nonzero_index() const {
    for (const auto& [p, g] : entries_)
        if (!g.is_zero()) return p;
    return std::nullopt;
}

MatrixR recurrence_rhs(const KZSystem& sys, const SeriesCoefficients& coeffs, int q) {
    if (coeffs.empty()) throw error("recurrence_rhs: empty series");
    const int lo = coeffs.min_index();
    const auto& first = coeffs.entries().begin()->second;
    MatrixR sum(first.rows(), first.cols());
    for (int l = lo; l <= q; ++l) {
        if (!coeffs.has(l))
            throw error("recurrence_rhs: missing lower coefficient G_" + std::to_string(l));
        const MatrixR& g = coeffs.at(l);
        if (g.is_zero()) continue;
        sum = sum + mat_mul(t_coeff(sys, q - l), g);
    }
    return sum;
}

RecurrenceStepResult recurrence_step(const KZSystem& sys, const SeriesCoefficients& coeffs, int q) {
    const std::size_t n = static_cast<std::size_t>(sys.n);
    MatrixR op = MatrixR::identity(n) * Rational(q + 1);
    const MatrixR t = t_matrix(sys.n);
    MatrixR rhs = recurrence_rhs(sys, coeffs, q);
    if (sys.rho == -1) {
        op = op - t; // [(q+1) I - T] G_{q+1} = +sum
    } else {
        op = op + t; // [(q+1) I + T] G_{q+1} = -sum
        rhs = -rhs;
    }

    RecurrenceStepResult result;
    // Column-wise solve; coefficients may be columns or square matrices.
    const std::size_t cols = rhs.cols();
    MatrixR coeff(n, cols);
    bool solvable_all = true;
    std::optional<MatrixR> obstruction;
    SolveReport last;
    for (std::size_t c = 0; c < cols; ++c) {
        SolveReport rep = solve_singular(op, rhs.col(c));
        if (rep.solvable) {
            coeff.set_col(c, *rep.particular);
        } else {
            solvable_all = false;
            // The step operator is symmetric, so the kernel component of
            // the rhs is the exact obstruction witness.
            MatrixR rhs_col = rhs.col(c);
            MatrixR witness = rhs_col - project_off_span(rhs_col, rep.kernel_basis);
            if (!obstruction) obstruction = MatrixR(n, cols);
            (*obstruction).set_col(c, witness);
        }
        last = std::move(rep);
    }
    result.was_singular = !last.kernel_basis.empty();
    result.freedom = std::move(last.kernel_basis);
    if (solvable_all) {
        result.coefficient = std::move(coeff);
    } else {
        result.coefficient = MatrixR(n, cols);
        result.obstruction = std::move(obstruction);
    }
    return result;
}

void extend_series(const KZSystem& sys, SeriesCoefficients& coeffs, int up_to) {
    while (coeffs.max_index() < up_to) {
        const int q = coeffs.max_index();
        RecurrenceStepResult step = recurrence_step(sys, coeffs, q);
        if (step.obstruction)
            throw internal_error("recurrence obstruction at step " + std::to_string(q + 1));
        coeffs.set(q + 1, std::move(step.coefficient));
    }
}

bool moments_check(const KZSystem& sys, const SeriesCoefficients& coeffs,
                   const std::vector<MatrixR>& residues, int extra) {
    if (static_cast<int>(residues.size()) != sys.n - 1)
        throw input_error("moments_check: expected n-1 residues");
    for (int p = 1; p <= sys.n - 1 + extra; ++p) {
        if (!coeffs.has(p))
            throw error("moments_check: series not extended to G_" + std::to_string(p));
        MatrixR sum(residues[0].rows(), residues[0].cols());
        for (std::size_t k = 0; k < residues.size(); ++k)
            sum = sum + residues[k] * sys.points[k].pow(static_cast<unsigned>(p - 1));
        if (sum != coeffs.at(p)) return false;
    }
    return true;
}

} // namespace kz

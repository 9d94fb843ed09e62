#pragma once

/**
 * Frobenius machinery at infinity: Laurent coefficients of a solution
 * after the substitution z = 1/xi, the step recurrences for rho = +-1,
 * and the moment identities linking partial-fraction residues to those
 * coefficients.
 *
 * For rho = -1 the step operator is (q+1) I - T, singular exactly at
 * q+1 in {-1, n-2, n-1}; for rho = +1 it is (q+1) I + T, singular at
 * q+1 in {-(n-1), -(n-2), 1}.
 */

#include <map>
#include <optional>
#include <vector>

#include "kz/model.hpp"

namespace kz {

class SeriesCoefficients {
public:
    bool has(int p) const { return entries_.count(p) != 0; }
    const MatrixR& at(int p) const;
    void set(int p, MatrixR g) { entries_[p] = std::move(g); }

    bool empty() const { return entries_.empty(); }
    int min_index() const;
    int max_index() const;
    // Lowest index whose coefficient is nonzero; nullopt for the trivial
    // series.
    std::optional<int> first_nonzero_index() const;

    const std::map<int, MatrixR>& entries() const { return entries_; }

private:
    std::map<int, MatrixR> entries_;
};

// Raw convolution sum over stored coefficients: sum of T_j G_l over
// j + l = q with j >= 0 and l >= min stored index. The step equation
// applies the rho-dependent sign on top of this.
MatrixR recurrence_rhs(const KZSystem& sys, const SeriesCoefficients& coeffs, int q);

struct RecurrenceStepResult {
    MatrixR coefficient;              // G_{q+1}; kernel-orthogonal at singular steps
    bool was_singular = false;
    std::vector<MatrixR> freedom;     // kernel of the step operator
    std::optional<MatrixR> obstruction; // nonzero kernel component of the rhs when unsolvable
};

// Solves the step equation for G_{q+1} given all lower coefficients.
RecurrenceStepResult recurrence_step(const KZSystem& sys, const SeriesCoefficients& coeffs, int q);

// Runs recurrence steps until G_{up_to} is present, storing every
// coefficient. Throws internal_error on an obstructed singular step.
void extend_series(const KZSystem& sys, SeriesCoefficients& coeffs, int up_to);

// True iff sum_k z_k^{p-1} L_k = G_p exactly for every p = 1..n-1+extra.
bool moments_check(const KZSystem& sys, const SeriesCoefficients& coeffs,
                   const std::vector<MatrixR>& residues, int extra);

} // namespace kz

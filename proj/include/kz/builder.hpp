#pragma once

/**
 * Constructive core: the n linearly independent rational solutions of the
 * rho = -1 system in partial-fraction form, assembly of the fundamental
 * matrix, and the rho = +1 fundamental solution obtained as the inverse
 * transpose.
 *
 * Each column is produced by the three-step scheme: seed the Laurent
 * coefficients at infinity, run the step recurrence (singular steps pinned
 * kernel-orthogonally), then recover the pole residues from the moment
 * identities through one Vandermonde solve. Closed-form coefficient
 * expressions for the same data are provided alongside and are
 * cross-checked against the recurrence route by the test suite.
 */

#include <optional>
#include <vector>

#include "kz/series.hpp"

namespace kz {

struct PartialFractionSolution {
    std::vector<Rational> points; // pole locations z_1..z_{n-1}
    std::vector<MatrixR> residues; // residue column (or matrix) per pole
    std::vector<MatrixR> poly_part; // polynomial part, ascending powers
};

struct FundamentalSolution {
    std::vector<PartialFractionSolution> columns; // Y_1 .. Y_n
    int rho = -1;
};

// Y_1: residues alpha_k * V1, no polynomial part.
PartialFractionSolution build_y1(const KZSystem& sys);

// Y_j for 2 <= j <= n-1: seeded one level lower in the zero-sum
// eigenspace.
PartialFractionSolution build_yj(const KZSystem& sys, int j);

// Y_n: linear polynomial part z*V3 + G0, residues from the recurrence +
// Vandermonde route. The closed-form residue ansatz gamma_s N_s below is
// a genuine solution only for n <= 4: from n = 5 on, the moment
// identities at the non-resonant indices 2..n-3 are forced and exclude
// every N-parallel residue set, so the generic route is used throughout.
PartialFractionSolution build_yn(const KZSystem& sys);

PartialFractionSolution build_yn_recurrence(const KZSystem& sys);

FundamentalSolution build_fundamental(const KZSystem& sys);

// (W^{-1})^T for the rho = -1 fundamental W; solves the rho = +1 system.
MatrixF rho_plus_fundamental(const KZSystem& sys);

MatrixR evaluate(const PartialFractionSolution& sol, const Rational& z0);
MatrixR evaluate(const FundamentalSolution& sol, const Rational& z0);

MatrixF to_matrix(const PartialFractionSolution& sol);
MatrixF to_matrix(const FundamentalSolution& sol);

// Column-wise partial-fraction data merged into matrix-valued residues
// and polynomial part.
PartialFractionSolution merge_columns(const FundamentalSolution& sol);

// Exact partial-fraction decomposition of a matrix whose entries have at
// most simple poles, all at the given points; nullopt if an entry
// violates that.
std::optional<PartialFractionSolution> to_partial_fractions(const MatrixF& w,
                                                            const std::vector<Rational>& points);

//
// Closed-form coefficient paths, kept as an independent route for
// cross-checking the recurrence construction.
//

// Signed last-row entry of the inverse Vandermonde on the points:
// alpha_k = (-1)^{n+k-1} / [prod_{i>k}(z_i - z_k) * prod_{k>j}(z_k - z_j)],
// 1-based k.
Rational inverse_vandermonde_last_row(const std::vector<Rational>& points, int k);

// Seed column col[0, a_1..a_{n-1}] with a_{j-1} = 1, a_{n-1} = -1.
MatrixR yj_seed(int n, int j);

// G_{n-1} of the Y_j build from the m, m_k, b_k expressions.
MatrixR yj_penultimate_closed(const KZSystem& sys, int j);

std::vector<MatrixR> y1_closed_residues(const KZSystem& sys);
std::vector<MatrixR> yj_closed_residues(const KZSystem& sys, int j);

// G_0 = -sum_i z_i N_i (shared by both Y_n routes).
MatrixR yn_g0(const KZSystem& sys);

// Expansion coefficient of P_k N_l over the N-basis at position p.
// Solving the eigenspace decomposition gives -1/(n-2) when p is one of
// {k, l} and 1/[(n-2)(n-3)] otherwise; n >= 4.
Rational residue_direction_coeff(int n, int p, int k, int l);

// G_1 = sum_{k>l} (z_k - z_l)^2 [U0/2 + U_{k,l}/(3-n)]; n >= 4.
MatrixR yn_g1_closed(const KZSystem& sys);

// gamma_s = sum_{k>l} (z_k - z_l)^2 * coeff(s,k,l); n >= 4. Always
// reconstructs G_1 as sum_s gamma_s N_s.
std::vector<Rational> yn_gamma(const KZSystem& sys);

// The N-parallel residue set gamma_s N_s; a valid Y_n only for n = 4.
std::vector<MatrixR> yn_closed_residues(const KZSystem& sys);

} // namespace kz

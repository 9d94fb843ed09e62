#pragma once

/**
 * The problem instance: transposition matrices of the natural S_n
 * representation, their sum T with its analytically known spectral data,
 * the power-weighted sums T_p, and the Fuchsian coefficient matrix A(z)
 * with simple poles at the prescribed points.
 */

#include <vector>

#include "kz/linalg.hpp"

namespace kz {

struct KZSystem {
    int n;                        // matrix dimension, >= 3
    std::vector<Rational> points; // z_1..z_{n-1}, pairwise distinct
    int rho;                      // +1 or -1

    KZSystem(int n, std::vector<Rational> points, int rho);
};

// Matrix of the transposition (i j), 1-based indices, i != j.
MatrixR perm_matrix(int n, int i, int j);

// P_k = P(1, k+1) for 1 <= k <= n-1.
MatrixR p_k(int n, int k);

// T = sum_k P_k; also checked against its bordered closed form.
MatrixR t_matrix(int n);

// T_p = sum_k P_k z_k^{p+1}, p >= 0. The raw variant skips the
// distinctness requirement so algebraic identities can be tested on
// degenerate point sets.
MatrixR t_coeff(const KZSystem& sys, int p);
MatrixR t_coeff_raw(int n, const std::vector<Rational>& points, int p);

// A(z) = sum_k P_k / (z - z_k).
MatrixF a_matrix(const KZSystem& sys);

struct SpectralData {
    Rational lambda1; // n-1, simple
    Rational lambda2; // n-2, multiplicity n-2
    Rational lambda3; // -1, simple
    MatrixR v1;                     // all-ones column
    std::vector<MatrixR> v2_basis;  // consecutive-difference basis of
                                    // {col[0,a] : sum a = 0}
    MatrixR v3;                     // col[n-1, -1, ..., -1]
    std::vector<MatrixR> n_vectors; // N_i with sum_i N_i = v3
};

SpectralData spectral_data(int n);

} // namespace kz

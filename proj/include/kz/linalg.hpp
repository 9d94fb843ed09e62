#pragma once

/**
 * Exact dense linear algebra over the rationals and over the
 * rational-function field: products, determinants, inverses,
 * singular-aware solves and the scalar Vandermonde residue solve.
 */

#include <optional>
#include <vector>

#include "kz/kernels.hpp"
#include "kz/matrix.hpp"

namespace kz {

MatrixR mat_mul(const MatrixR& a, const MatrixR& b);
MatrixF mat_mul(const MatrixF& a, const MatrixF& b);

// Fraction-free (Bareiss) elimination.
Rational determinant(const MatrixR& a);
// Clears a common denominator, then runs fraction-free elimination on the
// polynomial numerator matrix.
RationalFunction determinant(const MatrixF& a);

// Exact inverse via the adjugate of the cleared-denominator polynomial
// matrix. Throws singular_matrix_error when det is identically zero.
MatrixF inverse(const MatrixF& a);

struct SolveReport {
    std::optional<MatrixR> particular; // present iff solvable
    std::vector<MatrixR> kernel_basis; // exact basis of ker(a)
    bool solvable = false;
};

// Solves a x = b, a square, reporting insolvability as data rather than an
// error. For symmetric operators the particular solution carries zero
// component along the kernel (orthogonal pinning); otherwise the free
// (pivot-less) coordinates are set to zero.
SolveReport solve_singular(const MatrixR& a, const MatrixR& b);

// Subtracts the orthogonal projection onto span(basis); exact.
MatrixR project_off_span(const MatrixR& x, const std::vector<MatrixR>& basis);

// Unique columns L_1..L_{n-1} with sum_k z_k^{p-1} L_k = moments[p-1] for
// p = 1..n-1. The block system is solved as one scalar Vandermonde solve
// applied to every coordinate. Throws input_error on repeated points or a
// moment-count mismatch.
std::vector<MatrixR> vandermonde_residues(const std::vector<Rational>& points,
                                          const std::vector<MatrixR>& moments);

} // namespace kz

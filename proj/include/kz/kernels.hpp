#pragma once

/**
 * Data-parallel kernels for the expensive rational-function matrix
 * operations, in OpenMP and serial-reference flavours.
 *
 * Both flavours compute bit-identical exact results; the serial versions
 * are kept as the reference the test suite compares against, and the
 * benchmark target times the two side by side. Public entry points in
 * linalg.hpp dispatch on parallel_enabled().
 */

#include <cstddef>
#include <functional>

#include "kz/matrix.hpp"

namespace kz {

bool parallel_enabled() noexcept;
void set_parallel_enabled(bool on) noexcept;

// Runs f(0..n-1); OpenMP-parallel when enabled. Exceptions from workers
// are captured and rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

namespace serial {

MatrixF mul(const MatrixF& a, const MatrixF& b);
// dW/dz - rho * A * W, entry-wise.
MatrixF ode_residual(const MatrixF& w, const MatrixF& a, int rho);
// Fraction-free (Bareiss) determinant of a polynomial matrix.
Polynomial det(MatrixP m);
// Matrix of cofactors (signed minors) of a polynomial matrix.
MatrixP cofactor_matrix(const MatrixP& m);

} // namespace serial

namespace par {

MatrixF mul(const MatrixF& a, const MatrixF& b);
MatrixF ode_residual(const MatrixF& w, const MatrixF& a, int rho);
Polynomial det(MatrixP m);
MatrixP cofactor_matrix(const MatrixP& m);

} // namespace par

} // namespace kz

#pragma once

/**
 * Independent exact verification: symbolic ODE residuals, fundamentality,
 * pole-order bounds, moment identities, the integrality gate certifying
 * non-existence for integer-weighted 3x3 variants, and the commutation
 * relations that make the multi-variable system consistent.
 *
 * Every check is decided by canonical-form comparison of exact objects,
 * never by sampling.
 */

#include <string>
#include <vector>

#include "kz/builder.hpp"

namespace kz {

struct VerificationReport {
    bool ode_residual_zero = true;
    bool det_nonzero = true;     // vacuously true for non-square input
    bool pole_orders_ok = true;  // at most simple poles, all at the z_k
    bool moments_ok = true;

    struct Finding {
        std::string what;
        int row = -1, col = -1;       // offending entry, when applicable
        RationalFunction residual;     // exact witness value
    };
    std::vector<Finding> details;

    bool all_ok() const {
        return ode_residual_zero && det_nonzero && pole_orders_ok && moments_ok;
    }
};

// Symbolically reduces dW/dz - rho A(z) W and inspects the structure of W
// (pole orders, determinant for square input, moment identities extended
// three indices past the construction range).
VerificationReport verify_ode(const KZSystem& sys, const MatrixF& w);

struct GateVerdict {
    long long m1 = 0, m2 = 0;
    mpz_class lambda_squared; // m1^2 - m1 m2 + m2^2
    enum class Kind { no_rational_fundamental, inconclusive } verdict = Kind::inconclusive;
};

// Necessary-condition gate: non-integer residue eigenvalues at infinity
// rule out rational fundamental solutions. Integrality is necessary, not
// sufficient, hence "inconclusive" on the other branch.
GateVerdict rationality_gate(long long m1, long long m2);

struct ConsistencyResult {
    bool ok = false;
    long pairs = 0, triples = 0, quadruples = 0; // tuples checked
};

// Exhaustively checks, over all distinct index tuples:
//   P(i,j) = P(j,i);  [P(i,j)+P(j,k), P(i,k)] = 0;  [P(i,j), P(k,l)] = 0.
ConsistencyResult consistency_relations(int n);

// Builds the rho = -1 fundamental W and confirms (W^{-1})^T solves the
// rho = +1 system exactly, with det identity det(W^{-T}) * det(W) = 1.
bool verify_duality(const KZSystem& sys);

} // namespace kz

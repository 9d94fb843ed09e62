#include "kz/verifier.hpp"

namespace kz {

namespace {

void add_finding(VerificationReport& rep, std::string what, int i, int j,
                 RationalFunction witness) {
    rep.details.push_back({std::move(what), i, j, std::move(witness)});
}

bool check_moments(const KZSystem& sys, const MatrixF& w) {
    auto pf = to_partial_fractions(w, sys.points);
    if (!pf) return false;

    // Series of this solution: negative indices from the polynomial part,
    // positive ones from the residue moments. Extension past the
    // construction range is forced (the step operator is nonsingular
    // there), which makes the three extra moment identities a real check.
    SeriesCoefficients s;
    const int deg_q = static_cast<int>(pf->poly_part.size()) - 1;
    const int lo = std::min(-1, -deg_q);
    for (int p = lo; p <= 0; ++p) {
        const int q = -p;
        s.set(p, q < static_cast<int>(pf->poly_part.size())
                     ? pf->poly_part[static_cast<std::size_t>(q)]
                     : MatrixR(w.rows(), w.cols()));
    }
    for (int p = 1; p <= sys.n - 1; ++p) {
        MatrixR sum(w.rows(), w.cols());
        for (std::size_t k = 0; k < pf->residues.size(); ++k)
            sum = sum + pf->residues[k] * sys.points[k].pow(static_cast<unsigned>(p - 1));
        s.set(p, std::move(sum));
    }
    try {
        extend_series(sys, s, sys.n - 1 + 3);
    } catch (const error&) {
        return false;
    }
    return moments_check(sys, s, pf->residues, 3);
}

} // namespace

VerificationReport verify_ode(const KZSystem& sys, const MatrixF& w) {
    if (w.rows() != static_cast<std::size_t>(sys.n))
        throw dimension_error("verify_ode: row count differs from the system dimension");

    VerificationReport rep;
    const MatrixF a = a_matrix(sys);
    const MatrixF residual = par::ode_residual(w, a, sys.rho);
    for (std::size_t i = 0; i < residual.rows(); ++i)
        for (std::size_t j = 0; j < residual.cols(); ++j)
            if (!residual(i, j).is_zero()) {
                rep.ode_residual_zero = false;
                add_finding(rep, "nonzero ODE residual", static_cast<int>(i),
                            static_cast<int>(j), residual(i, j));
            }

    Polynomial allowed(Rational(1));
    for (const auto& zk : sys.points)
        allowed = allowed * Polynomial(std::vector<Rational>{-zk, Rational(1)});
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            if (!divides(w(i, j).den(), allowed)) {
                rep.pole_orders_ok = false;
                add_finding(rep, "pole of order > 1 or pole away from the prescribed points",
                            static_cast<int>(i), static_cast<int>(j), w(i, j));
            }

    if (w.is_square()) {
        const RationalFunction det = determinant(w);
        if (det.is_zero()) {
            rep.det_nonzero = false;
            add_finding(rep, "identically zero determinant", -1, -1, det);
        }
    }

    if (rep.pole_orders_ok) {
        rep.moments_ok = check_moments(sys, w);
        if (!rep.moments_ok)
            add_finding(rep, "moment identities fail under recurrence extension", -1, -1,
                        RationalFunction());
    } else {
        rep.moments_ok = false;
    }
    return rep;
}

GateVerdict rationality_gate(long long m1, long long m2) {
    GateVerdict v;
    v.m1 = m1;
    v.m2 = m2;
    const mpz_class a(static_cast<long>(m1)), b(static_cast<long>(m2));
    v.lambda_squared = a * a - a * b + b * b;
    const bool perfect_square = mpz_perfect_square_p(v.lambda_squared.get_mpz_t()) != 0;
    v.verdict = perfect_square ? GateVerdict::Kind::inconclusive
                               : GateVerdict::Kind::no_rational_fundamental;
    return v;
}

ConsistencyResult consistency_relations(int n) {
    if (n < 3) throw input_error("consistency_relations: n must be at least 3");
    ConsistencyResult r;
    r.ok = true;
    auto commutes = [](const MatrixR& x, const MatrixR& y) {
        return mat_mul(x, y) == mat_mul(y, x);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            ++r.pairs;
            if (perm_matrix(n, i, j) != perm_matrix(n, j, i)) r.ok = false;
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j) continue;
                ++r.triples;
                const MatrixR sum = perm_matrix(n, i, j) + perm_matrix(n, j, k);
                if (!commutes(sum, perm_matrix(n, i, k))) r.ok = false;
                for (int l = 1; l <= n; ++l) {
                    if (l == i || l == j || l == k) continue;
                    ++r.quadruples;
                    if (!commutes(perm_matrix(n, i, j), perm_matrix(n, k, l))) r.ok = false;
                }
            }
        }
    return r;
}

bool verify_duality(const KZSystem& sys) {
    const KZSystem minus(sys.n, sys.points, -1);
    const KZSystem plus(sys.n, sys.points, +1);
    const MatrixF w = to_matrix(build_fundamental(minus));
    const MatrixF y = inverse(w).transpose();
    if (!verify_ode(plus, y).all_ok()) return false;
    return determinant(y) * determinant(w) == RationalFunction(Rational(1));
}

} // namespace kz

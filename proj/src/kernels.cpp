#include "kz/kernels.hpp"

#include <atomic>
#include <mutex>

namespace kz {

namespace {
std::atomic<bool> g_parallel{true};
} // namespace

bool parallel_enabled() noexcept { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel_enabled(bool on) noexcept { g_parallel.store(on, std::memory_order_relaxed); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    if (!parallel_enabled() || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr eptr = nullptr;
    std::mutex eptr_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(eptr_mutex);
            if (!eptr) eptr = std::current_exception();
        }
    }
    if (eptr) std::rethrow_exception(eptr);
}

namespace {

void require_product_shape(const MatrixF& a, const MatrixF& b) {
    if (a.cols() != b.rows()) throw dimension_error("matrix product: inner dimensions differ");
}

RationalFunction product_entry(const MatrixF& a, const MatrixF& b, std::size_t i, std::size_t j) {
    RationalFunction acc;
    for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
    return acc;
}

RationalFunction residual_entry(const MatrixF& w, const MatrixF& a, int rho, std::size_t i,
                                std::size_t j) {
    RationalFunction s;
    for (std::size_t k = 0; k < a.cols(); ++k) s = s + a(i, k) * w(k, j);
    if (rho == 1) return w(i, j).derivative() - s;
    return w(i, j).derivative() + s;
}

// Fraction-free elimination; divisions by the previous pivot are exact.
// When `inner_parallel` is set the per-step row updates run concurrently.
Polynomial bareiss_det(MatrixP m, bool inner_parallel) {
    if (!m.is_square()) throw dimension_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial(Rational(1));
    int sign = 1;
    Polynomial prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        auto update_row = [&](std::size_t i) {
            const std::size_t row = k + 1 + i;
            for (std::size_t j = k + 1; j < n; ++j)
                m(row, j) = (m(k, k) * m(row, j) - m(row, k) * m(k, j)).exact_div(prev);
            m(row, k) = Polynomial();
        };
        // Per-step fork overhead outweighs the row updates on small blocks.
        if (inner_parallel && n - k - 1 >= 8) {
            parallel_for(n - k - 1, update_row);
        } else {
            for (std::size_t i = 0; i < n - k - 1; ++i) update_row(i);
        }
        prev = m(k, k);
        if (prev.is_zero()) return {};
    }
    Polynomial d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

MatrixP minor_of(const MatrixP& m, std::size_t drop_row, std::size_t drop_col) {
    MatrixP r(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, ri = 0; i < m.rows(); ++i) {
        if (i == drop_row) continue;
        for (std::size_t j = 0, rj = 0; j < m.cols(); ++j) {
            if (j == drop_col) continue;
            r(ri, rj) = m(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

Polynomial cofactor(const MatrixP& m, std::size_t i, std::size_t j) {
    Polynomial d = bareiss_det(minor_of(m, i, j), false);
    return ((i + j) % 2 == 0) ? d : -d;
}

} // namespace

namespace serial {

MatrixF mul(const MatrixF& a, const MatrixF& b) {
    require_product_shape(a, b);
    MatrixF r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = product_entry(a, b, i, j);
    return r;
}

MatrixF ode_residual(const MatrixF& w, const MatrixF& a, int rho) {
    require_product_shape(a, w);
    MatrixF r(w.rows(), w.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) r(i, j) = residual_entry(w, a, rho, i, j);
    return r;
}

Polynomial det(MatrixP m) { return bareiss_det(std::move(m), false); }

MatrixP cofactor_matrix(const MatrixP& m) {
    if (!m.is_square()) throw dimension_error("cofactors of a non-square matrix");
    MatrixP c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = cofactor(m, i, j);
    return c;
}

} // namespace serial

namespace par {

MatrixF mul(const MatrixF& a, const MatrixF& b) {
    require_product_shape(a, b);
    MatrixF r(a.rows(), b.cols());
    const std::size_t cols = b.cols();
    parallel_for(a.rows() * cols, [&](std::size_t idx) {
        r(idx / cols, idx % cols) = product_entry(a, b, idx / cols, idx % cols);
    });
    return r;
}

MatrixF ode_residual(const MatrixF& w, const MatrixF& a, int rho) {
    require_product_shape(a, w);
    MatrixF r(w.rows(), w.cols());
    const std::size_t cols = w.cols();
    parallel_for(w.rows() * cols, [&](std::size_t idx) {
        r(idx / cols, idx % cols) = residual_entry(w, a, rho, idx / cols, idx % cols);
    });
    return r;
}

Polynomial det(MatrixP m) { return bareiss_det(std::move(m), true); }

MatrixP cofactor_matrix(const MatrixP& m) {
    if (!m.is_square()) throw dimension_error("cofactors of a non-square matrix");
    MatrixP c(m.rows(), m.cols());
    const std::size_t cols = m.cols();
    parallel_for(m.rows() * cols, [&](std::size_t idx) {
        c(idx / cols, idx % cols) = cofactor(m, idx / cols, idx % cols);
    });
    return c;
}

} // namespace par

} // namespace kz

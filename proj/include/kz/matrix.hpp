#pragma once

/**
 * Dense matrices over an exact coefficient type (Rational, Polynomial or
 * RationalFunction). Row-major storage, value semantics.
 */

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "kz/errors.hpp"
#include "kz/rational.hpp"
#include "kz/rational_function.hpp"

namespace kz {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, T()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.e_) x = -x;
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "matrix addition");
        Matrix r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "matrix subtraction");
        Matrix r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
        return r;
    }

    Matrix operator*(const T& s) const {
        Matrix r(*this);
        for (auto& x : r.e_) x = x * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        const T zero{};
        for (const auto& x : e_)
            if (!(x == zero)) return false;
        return true;
    }

    Matrix col(std::size_t j) const {
        Matrix c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, const Matrix& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_error(std::string(what) + ": shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> e_;
};

using MatrixR = Matrix<Rational>;
using MatrixF = Matrix<RationalFunction>;
using MatrixP = Matrix<Polynomial>;

// n x 1 column from an initializer list.
MatrixR column(std::initializer_list<Rational> entries);
MatrixR column(const std::vector<Rational>& entries);

Rational dot(const MatrixR& a, const MatrixR& b);

// Plain serial product; kz::mat_mul in linalg.hpp is the dispatching
// public entry point.
template <class T>
Matrix<T> mul_serial(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw dimension_error("matrix product: inner dimensions differ");
    Matrix<T> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T acc{};
            for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

// Lift a rational matrix into the rational-function field.
MatrixF lift(const MatrixR& a);

} // namespace kz

#include "kz/matrix.hpp"

namespace kz {

MatrixR column(std::initializer_list<Rational> entries) {
    MatrixR c(entries.size(), 1);
    std::size_t i = 0;
    for (const auto& e : entries) c(i++, 0) = e;
    return c;
}

MatrixR column(const std::vector<Rational>& entries) {
    MatrixR c(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) c(i, 0) = entries[i];
    return c;
}

Rational dot(const MatrixR& a, const MatrixR& b) {
    if (a.rows() != b.rows() || a.cols() != 1 || b.cols() != 1)
        throw dimension_error("dot product needs two equal-length columns");
    Rational s(0);
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, 0) * b(i, 0);
    return s;
}

MatrixF lift(const MatrixR& a) {
    MatrixF f(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) f(i, j) = RationalFunction(a(i, j));
    return f;
}

} // namespace kz

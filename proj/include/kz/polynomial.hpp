#pragma once

/**
 * Univariate polynomials over the exact rationals.
 *
 * Coefficients are stored ascending by degree; the highest stored
 * coefficient is nonzero. The zero polynomial is the empty list and its
 * degree is the distinguished "minus infinity", surfaced as an empty
 * optional.
 */

#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "kz/rational.hpp"

namespace kz {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);      // NOLINT: implicit constant embedding
    Polynomial(long constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> ascending_coeffs);

    // The monomial z.
    static Polynomial variable();
    // c * z^k
    static Polynomial monomial(const Rational& c, unsigned k);

    bool is_zero() const { return c_.empty(); }
    // Empty optional encodes deg(0) = -infinity.
    std::optional<int> degree() const;
    // Degree with deg(0) mapped to -1; convenient for loop bounds.
    int degree_or_minus1() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficient of z^k, zero beyond the stored range.
    Rational coeff(unsigned k) const;
    const Rational& leading_coeff() const;

    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !is_zero() && leading_coeff() == Rational(1); }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const Rational& s) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Rational eval(const Rational& z0) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    // Euclidean division: *this = q * d + r with deg r < deg d.
    // Returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    // Division that must leave no remainder.
    Polynomial exact_div(const Polynomial& d) const;

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rational> c_; // ascending, trailing coefficient nonzero
};

// Monic gcd via the content-stripped Euclidean scheme (primitive
// pseudo-remainder sequence over the integers). Both-zero input is a
// domain error.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
Polynomial lcm(const Polynomial& p, const Polynomial& q);
// True iff d divides a exactly.
bool divides(const Polynomial& d, const Polynomial& a);
Polynomial pow(const Polynomial& p, unsigned exponent);

} // namespace kz

#pragma once

/**
 * The field of fractions of kz::Polynomial.
 *
 * Canonical form throughout: gcd(num, den) = 1 and den monic, so equality
 * is structural comparison. Construction and every arithmetic operation
 * re-normalize.
 */

#include <string>

#include "kz/polynomial.hpp"

namespace kz {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {} // NOLINT
    RationalFunction(long constant) : num_(Rational(constant)), den_(Rational(1)) {}  // NOLINT
    RationalFunction(Polynomial num);                                                 // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    // 1 / (z - c)
    static RationalFunction simple_pole(const Rational& c);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Polynomial(Rational(1)); }
    // Requires is_polynomial().
    const Polynomial& as_polynomial() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction derivative() const;
    Rational eval(const Rational& z0) const;

    // Pole order at z0 of the reduced form (0 if regular there).
    int pole_order(const Rational& z0) const;

    std::string to_string(const std::string& var = "z") const;

private:
    void normalize();
    Polynomial num_, den_;
};

} // namespace kz

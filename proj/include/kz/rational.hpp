#pragma once

/**
 * Exact arbitrary-precision rational scalars.
 *
 * Thin value wrapper around GMP's mpq_class. Invariants maintained at all
 * times: denominator > 0 and gcd(|num|, den) = 1 (canonical form), so
 * structural equality is mathematical equality. Immutable in spirit: every
 * operation returns a fresh value.
 */

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "kz/errors.hpp"

namespace kz {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: intentionally implicit, mirrors integer literals
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v);

    // Strict "p/q" / "p" syntax, optional leading minus on p only.
    static Rational parse(const std::string& text);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const;
    Rational pow(unsigned exponent) const;

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

private:
    mpq_class v_; // always canonical: den > 0, gcd(|num|, den) = 1
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace kz

#include "kz/rational_function.hpp"

namespace kz {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::simple_pole(const Rational& c) {
    return RationalFunction(Polynomial(Rational(1)),
                            Polynomial(std::vector<Rational>{-c, Rational(1)}));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree_or_minus1() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    if (!den_.is_monic()) {
        Rational lc_inv = den_.leading_coeff().inverse();
        num_ = num_ * lc_inv;
        den_ = den_ * lc_inv;
    }
}

const Polynomial& RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw error("rational function is not a polynomial: " + to_string());
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw division_by_zero("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& z0) const {
    Rational d = den_.eval(z0);
    if (d.is_zero()) throw pole_error(z0.to_string());
    return num_.eval(z0) / d;
}

int RationalFunction::pole_order(const Rational& z0) const {
    int order = 0;
    Polynomial d = den_;
    const Polynomial lin(std::vector<Rational>{-z0, Rational(1)});
    while (!d.is_zero() && d.eval(z0).is_zero()) {
        d = d.exact_div(lin);
        ++order;
    }
    return order;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace kz

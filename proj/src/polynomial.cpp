#include "kz/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace kz {

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    trim();
}

Polynomial Polynomial::variable() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& c, unsigned k) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> Polynomial::degree() const {
    if (is_zero()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

Rational Polynomial::coeff(unsigned k) const {
    return k < c_.size() ? c_[k] : Rational(0);
}

const Rational& Polynomial::leading_coeff() const {
    static const Rational zero(0);
    return is_zero() ? zero : c_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    if (s.is_zero()) return {};
    Polynomial r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

Rational Polynomial::eval(const Rational& z0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z0 + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * leading_coeff().inverse();
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw division_by_zero("polynomial division by zero");
    Polynomial r(*this);
    std::vector<Rational> q;
    int dd = d.degree_or_minus1();
    if (r.degree_or_minus1() >= dd) q.assign(static_cast<std::size_t>(r.degree_or_minus1() - dd) + 1, Rational(0));
    const Rational lc_inv = d.leading_coeff().inverse();
    while (!r.is_zero() && r.degree_or_minus1() >= dd) {
        int s = r.degree_or_minus1() - dd;
        Rational c = r.leading_coeff() * lc_inv;
        q[static_cast<std::size_t>(s)] = c;
        r = r - Polynomial::monomial(c, static_cast<unsigned>(s)) * d;
    }
    return {Polynomial(std::move(q)), std::move(r)};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
    auto [quot, rem] = divmod(d);
    if (!rem.is_zero()) throw internal_error("exact polynomial division left a remainder");
    return quot;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1));
        if (i == 0) {
            os << a.to_string();
        } else {
            if (!unit) os << a.to_string() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Integer-coefficient scratch representation for the gcd computation.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zprimitive(ZPoly& p) {
    ztrim(p);
    if (p.empty()) return;
    mpz_class g = zcontent(p);
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (sgn(p.back()) < 0)
        for (auto& c : p) c = -c;
}

// Clear denominators and strip integer content.
ZPoly to_primitive_int(const Polynomial& p) {
    mpz_class l(1);
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(c.numerator() * (l / c.denominator()));
    zprimitive(z);
    return z;
}

// Classical pseudo-remainder: premultiplies by powers of lc(b) so every
// step stays in Z[z].
ZPoly zpseudo_rem(ZPoly r, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lcb = b.back();
    while (r.size() > db) {
        const std::size_t shift = r.size() - 1 - db;
        mpz_class lr = r.back();
        for (auto& c : r) c *= lcb;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= lr * b[i];
        ztrim(r);
        if (r.empty()) break;
    }
    return r;
}

} // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw error("gcd(0, 0) is undefined");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();

    ZPoly a = to_primitive_int(p);
    ZPoly b = to_primitive_int(q);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zpseudo_rem(a, b);
        zprimitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(a.size());
    for (const auto& c : a) coeffs.emplace_back(c, mpz_class(1));
    return Polynomial(std::move(coeffs)).monic();
}

Polynomial lcm(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    return (p * q.exact_div(gcd(p, q))).monic();
}

bool divides(const Polynomial& d, const Polynomial& a) {
    if (d.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    return a.divmod(d).second.is_zero();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial acc(Rational(1));
    for (unsigned i = 0; i < exponent; ++i) acc = acc * p;
    return acc;
}

} // namespace kz

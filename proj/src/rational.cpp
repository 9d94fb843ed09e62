#include "kz/rational.hpp"

#include <cctype>
#include <ostream>

namespace kz {

namespace {

void require_nonzero_den(const mpz_class& den) {
    if (sgn(den) == 0) throw division_by_zero("rational with zero denominator");
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den) : v_(num, den == 0 ? 1 : den) {
    require_nonzero_den(mpz_class(den));
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    require_nonzero_den(den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    require_nonzero_den(v_.get_den());
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::string t = text;
    bool negative = false;
    if (!t.empty() && t[0] == '-') {
        negative = true;
        t = t.substr(1);
    }
    std::string num = t, den = "1";
    if (auto slash = t.find('/'); slash != std::string::npos) {
        num = t.substr(0, slash);
        den = t.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw input_error("malformed rational \"" + text + "\": expected p or p/q with minus on p only");
    mpz_class n(num), d(den);
    if (sgn(d) == 0) throw input_error("malformed rational \"" + text + "\": zero denominator");
    if (negative) n = -n;
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero");
    return Rational(denominator(), numerator());
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), numerator().get_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), denominator().get_mpz_t(), exponent);
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace kz

#include "doctest.h"

#include <random>

#include "kz/rational.hpp"

using kz::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("basic arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(7, 3) * Rational(0) == Rational(0));
    CHECK(Rational(2, 4) == Rational(1, 2)); // reduced on construction
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2)); // denominator made positive
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
}

TEST_CASE("division by zero is a distinct error") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), kz::division_by_zero);
    CHECK_THROWS_AS(Rational(0).inverse(), kz::division_by_zero);
    CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), kz::division_by_zero);
}

TEST_CASE("serialization round trip") {
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational(-3, 4).to_string() == "-3/4"); // minus on the numerator only
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-9") == Rational(-9));
    CHECK(Rational::parse("4/6") == Rational(2, 3));

    CHECK_THROWS_AS(Rational::parse("1/-2"), kz::input_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), kz::input_error);
    CHECK_THROWS_AS(Rational::parse(""), kz::input_error);
    CHECK_THROWS_AS(Rational::parse("a/b"), kz::input_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), kz::input_error);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational r = random_rational(rng);
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("ordering and helpers") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-2).pow(2) == Rational(4));
    CHECK(Rational(5, 3).pow(0) == Rational(1));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "swfam/rational.hpp"

using namespace swfam;

TEST_CASE("lowest terms and positive denominator") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(-10, -5) == Rational(2));
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), AlgebraError);
    CHECK_THROWS_AS(Rational(3) / Rational(0), AlgebraError);
}

TEST_CASE("field arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a.pow(3) == Rational(1, 27));
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 2) < Rational(-2));
    CHECK(Rational(7, 7) == Rational(1));
}

TEST_CASE("no overflow at factorial scale") {
    // 25!/24! = 25 exercises multi-limb intermediates
    Rational f(factorial(25));
    CHECK(f / Rational(factorial(24)) == Rational(25));
    Rational big = Rational(Int("123456789012345678901234567890"), Int(7));
    CHECK(big * Rational(7) == Rational(Int("123456789012345678901234567890")));
}

TEST_CASE("random field axioms") {
    std::mt19937_64 rng(7);
    auto pick = [&] {
        long long n = static_cast<long long>(rng() % 41) - 20;
        long long d = 1 + static_cast<long long>(rng() % 12);
        return Rational(n, d);
    };
    for (int t = 0; t < 200; ++t) {
        Rational a = pick(), b = pick(), c = pick();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!c.is_zero())
            CHECK(a * c / c == a);
    }
}

TEST_CASE("formatting and parsing") {
    CHECK(Rational(5, 8).str() == "5/8");
    CHECK(Rational(-5, 8).str() == "-5/8");
    CHECK(Rational(9).str() == "9");
    CHECK(Rational::parse("5/8") == Rational(5, 8));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("x"), AlgebraError);
    CHECK_THROWS_AS(Rational::parse("1/0"), AlgebraError);
    CHECK_THROWS_AS(Rational::parse("1.5"), AlgebraError);
}

TEST_CASE("binomial and factorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

#include "tolspace/error.hpp"
#include "tolspace/rational.hpp"

#include <doctest.h>

#include <random>

using namespace tolspace;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("parsing accepts p and p/q, rejects junk") {
    CHECK(Rational::parse("43/128") == Rational(43, 128));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("+3/9") == Rational(1, 3));
    CHECK(Rational::parse(" 5/10 ") == Rational(1, 2));
    CHECK_FALSE(Rational::try_parse("1.5").has_value());
    CHECK_FALSE(Rational::try_parse("1/0").has_value());
    CHECK_FALSE(Rational::try_parse("").has_value());
    CHECK_FALSE(Rational::try_parse("a/b").has_value());
    CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("arith examples stay exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(1) / Rational(3) == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK(Rational::pow2(-8) == Rational(1, 256));
    CHECK(Rational::pow2(5) == Rational(32));
    CHECK(Rational(43, 128) - Rational(1, 3) == Rational(1, 384));
}

TEST_CASE("floor and abs") {
    CHECK(Rational(5, 3).floor() == 1);
    CHECK(Rational(-5, 3).floor() == -2);
    CHECK(Rational(-6, 3).floor() == -2);
    CHECK(Rational(7).floor() == 7);
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
}

TEST_CASE("round trip and order on random values") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        long long num = static_cast<long long>(rng() % 20001) - 10000;
        long long den = 1 + static_cast<long long>(rng() % 999);
        Rational r(num, den);
        CHECK(Rational::parse(r.str()) == r);
        // order agrees with cross multiplication
        Rational s(static_cast<long long>(rng() % 2001) - 1000,
                   1 + static_cast<long long>(rng() % 99));
        bool lt = r.numerator() * s.denominator() < s.numerator() * r.denominator();
        CHECK((r < s) == lt);
    }
}

#include <doctest.h>

#include "qrsym/rational.hpp"

using namespace qrsym;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "1", "-1", "5/3", "-22/7", "123456789123456789123/2"}) {
        CHECK(Rational::from_string(s).str() == s);
    }
    CHECK_THROWS_AS(Rational::from_string("1.5"), BadInput);
    CHECK_THROWS_AS(Rational::from_string("x"), BadInput);
    CHECK_THROWS_AS(Rational(1, 0), ZeroDenominator);
}

TEST_CASE("arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK(a.inv() == Rational(2));
    CHECK_THROWS_AS(Rational(0).inv(), ZeroDenominator);
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(a < Rational(2, 3));
}

TEST_CASE("big values stay exact") {
    Rational x = Rational::from_string("1/1000000007");
    Rational acc(0);
    for (int i = 0; i < 100; ++i) acc += x;
    CHECK(acc == Rational::from_string("100/1000000007"));
}

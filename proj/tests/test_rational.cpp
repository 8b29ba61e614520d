#include <doctest.h>

#include "errors.hpp"
#include "rational.hpp"

using prl::InvalidInput;
using prl::Rational;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
}

TEST_CASE("parse accepts p/q and p, rejects junk") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+5/10") == Rational(1, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse(""), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1/"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("/2"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1/-2"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1.5"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1 / 2"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("x"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("3/0"), InvalidInput);
}

TEST_CASE("arithmetic is exact for large magnitudes") {
  // 10^30/7 - 10^30/11 = 4*10^30/77, coprime to 77
  Rational a = Rational::parse("1000000000000000000000000000000/7");
  Rational b = Rational::parse("-1000000000000000000000000000000/11");
  Rational sum = a + b;
  CHECK(sum == Rational::parse("4000000000000000000000000000000/77"));
  CHECK(sum - b == a);
  CHECK((a * b) / b == a);
}

TEST_CASE("division and reciprocal") {
  CHECK(Rational(3, 4) / Rational(3) == Rational(1, 4));
  CHECK(Rational(-5, 7).reciprocal() == Rational(-7, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInput);
  CHECK_THROWS_AS(Rational(0).reciprocal(), InvalidInput);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 2).sign() == 1);
  CHECK(Rational(-1, 2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

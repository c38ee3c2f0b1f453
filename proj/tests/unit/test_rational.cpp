#include <doctest.h>

#include <sstream>

#include "mediator/rational.hpp"

using mediator::Rational;
using mediator::RationalError;

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("0/5").is_zero());
  CHECK(Rational(3, -6).str() == "-1/2");
  std::ostringstream os;
  os << Rational(10, 4);
  CHECK(os.str() == "5/2");
}

TEST_CASE("rational rejects malformed text") {
  CHECK_THROWS_AS(Rational::parse("1/0"), RationalError);
  CHECK_THROWS_AS(Rational::parse(""), RationalError);
  CHECK_THROWS_AS(Rational::parse("1.5"), RationalError);
  CHECK_THROWS_AS(Rational::parse("a/b"), RationalError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), RationalError);
  CHECK_THROWS_AS(Rational(1, 0), RationalError);
}

TEST_CASE("rational arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK(Rational(-2, 3).reciprocal() == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(0).reciprocal(), RationalError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), RationalError);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(5).sign() == 1);
  CHECK(Rational(-5).sign() == -1);
}

TEST_CASE("large values do not overflow") {
  Rational x(1);
  for (int k = 0; k < 200; ++k) x *= Rational(3, 2);
  for (int k = 0; k < 200; ++k) x /= Rational(3, 2);
  CHECK(x == Rational(1));
}

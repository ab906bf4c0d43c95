#include <doctest.h>

#include "tnncert/errors.hpp"
#include "tnncert/rational.hpp"

using tnncert::InputError;
using tnncert::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("parse accepts integers, fractions and decimals") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse(" 6/4 ") == Rational(3, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("3.") == Rational(3));
  CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "-", "1/0", "a", "1/-2", "1.2.3", "1/2/3", "0x10", "1e5", "."}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), InputError);
  }
}

TEST_CASE("canonical form") {
  const Rational r(10, -4);
  CHECK(r.to_string() == "-5/2");
  CHECK(r.numerator_string() == "-5");
  CHECK(r.denominator_string() == "2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(4, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(2, 3) == Rational(-2, 3));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(Rational(-1, 3) < Rational(-1, 4));
  CHECK(Rational(7, 2) > Rational(3));
  CHECK(Rational(-2).sign() == -1);
  CHECK(Rational().is_zero());
}

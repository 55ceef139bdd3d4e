#include <limits>
#include <sstream>

#include "altgame/rational.hpp"
#include "doctest.h"

using altgame::Rational;

TEST_CASE("rationals are stored reduced with a positive denominator") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  const Rational half(1, 2), third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(-half == Rational(-1, 2));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK((Rational(1, 2) - Rational(1, 2)).sign() == 0);
  // 1/3 + 1/3 + 1/3 is exactly one; binary floating point cannot say that.
  CHECK(third + third + third == Rational(1));
}

TEST_CASE("ordering compares by value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7, 3) > Rational(2));
}

TEST_CASE("parse and str") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("0") .str() == "0/1");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(5).str() == "5/1");
  for (const char* bad : {"", "1/0", "1/", "/2", "a", "1.5", "1/2/3", "--1", " 1"})
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  std::ostringstream out;
  out << Rational(3, 9);
  CHECK(out.str() == "1/3");
}

TEST_CASE("overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_NOTHROW(big * Rational(1, 2));
}

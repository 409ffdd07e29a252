#include <doctest.h>

#include <random>

#include "nilfields/errors.hpp"
#include "nilfields/rational.hpp"
#include "support/helpers.hpp"

using namespace nilfields;

TEST_CASE("parse_rational accepts both forms with optional leading minus") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("2/4") == Rational(1, 2));  // canonicalized on entry
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("-"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("+3"), ParseError);
  CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("/2"), ParseError);
}

TEST_CASE("to_string emits canonical p/q, or p when the denominator is 1") {
  CHECK(to_string(Rational(4, 6)) == "2/3");
  CHECK(to_string(Rational(-4, 6)) == "-2/3");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(7, 1)) == "7");
  CHECK(to_string(Rational(-7)) == "-7");
}

TEST_CASE("stored form is always reduced with positive denominator") {
  const Rational q = Rational(1, 6) + Rational(1, 3);
  CHECK(numerator(q) == 1);
  CHECK(denominator(q) == 2);
  const Rational z = Rational(2, 5) - Rational(2, 5);
  CHECK(numerator(z) == 0);
  CHECK(denominator(z) == 1);
  const Rational n = Rational(3, 4) * Rational(-8, 9);
  CHECK(numerator(n) == -2);
  CHECK(denominator(n) == 3);
}

TEST_CASE("parse/to_string round-trips random rationals") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000000);
  for (int t = 0; t < 200; ++t) {
    const Rational q(num(rng), den(rng));
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("basis_combination renders readable vectors") {
  CHECK(basis_combination(unit_vector(5, 4)) == "e5");
  CHECK(basis_combination(RationalVector{Rational(1), Rational(0),
                                         Rational(-1, 2), Rational(0),
                                         Rational(0)}) == "e1 - 1/2 e3");
  CHECK(basis_combination(RationalVector(4, Rational(0))) == "0");
  CHECK(basis_combination(RationalVector{Rational(-1), Rational(2)}) ==
        "-e1 + 2 e2");
}

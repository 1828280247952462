#include "oracles.hpp"
#include "qreider/errors.hpp"
#include "qreider/rational.hpp"

#include <doctest.h>

using namespace qreider;

TEST_CASE("literals parse to reduced form") {
  CHECK(parse_rational("4/2") == Rational(2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(denominator_of(parse_rational("6/3")) == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK_THROWS_AS(parse_rational("3/"), DomainError);
}

TEST_CASE("floor, ceil and fractional part") {
  CHECK(floor_of(Rational(-3, 2)) == -2);
  CHECK(ceil_of(Rational(-3, 2)) == -1);
  CHECK(frac_of(Rational(-3, 2)) == Rational(1, 2));
  CHECK(floor_of(Rational(7, 3)) == 2);
  CHECK(ceil_of(Rational(7, 3)) == 3);
  CHECK(floor_of(Rational(5)) == 5);
  CHECK(ceil_of(Rational(5)) == 5);

  oracle::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const Rational q = gen.rational(-50, 50, 40);
    const Integer f = oracle::floor_div(numerator_of(q), denominator_of(q));
    CHECK(floor_of(q) == f);
    CHECK(ceil_of(q) == -floor_of(-q));
    CHECK(frac_of(q) >= 0);
    CHECK(frac_of(q) < 1);
  }
}

TEST_CASE("integer square root of rationals") {
  CHECK(isqrt_floor(Rational(0)) == 0);
  CHECK(isqrt_floor(Rational(99, 4)) == 4);
  CHECK(isqrt_floor(Rational(25)) == 5);
  CHECK(isqrt_floor(Rational(2499, 100)) == 4);
  CHECK_THROWS_AS(isqrt_floor(Rational(-1)), DomainError);
  oracle::Gen gen(12);
  for (int i = 0; i < 300; ++i) {
    const Rational q = gen.rational(0, 2000, 17);
    const Integer r = isqrt_floor(q);
    CHECK(Rational(r * r) <= q);
    CHECK(Rational((r + 1) * (r + 1)) > q);
  }
}

TEST_CASE("dyadic and rendering") {
  CHECK(dyadic(0) == 1);
  CHECK(dyadic(3) == Rational(1, 8));
  CHECK(dyadic(70) * Rational(Integer(1) << 70) == 1);
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(is_integer(Rational(6, 3)));
  CHECK_FALSE(is_integer(Rational(1, 2)));
}

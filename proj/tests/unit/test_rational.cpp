#include "doctest.h"

#include "semiarith/errors.hpp"
#include "semiarith/field/rational.hpp"

#include <cmath>

using namespace semiarith;
using namespace semiarith::field;

TEST_CASE("rationals stay in lowest terms") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  q *= Rational(4, 3);
  CHECK(q == -2);
  CHECK(q.get_den() == 1);
  CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("  -10/4 ") == Rational(-5, 2));
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(parse_rational("1/x"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
}

TEST_CASE("dyadic square-root bounds bracket the true root") {
  for (int n : {2, 3, 5, 7, 1000003}) {
    for (unsigned bits : {8U, 40U, 120U}) {
      const Rational lo = sqrt_lower(n, bits), hi = sqrt_upper(n, bits);
      CHECK(lo * lo <= n);
      CHECK(hi * hi >= n);
      CHECK(hi - lo <= Rational(1) / (Integer(1) << bits));
    }
  }
  CHECK(sqrt_lower(Rational(9, 4), 10) == Rational(3, 2));
  CHECK(sqrt_upper(Rational(9, 4), 10) == Rational(3, 2));
}

TEST_CASE("dyadic rounding") {
  const Rational third(1, 3);
  CHECK(dyadic_floor(third, 4) == Rational(5, 16));
  CHECK(dyadic_ceil(third, 4) == make_rational(6, 16));
  CHECK(dyadic_round(third, 4) == Rational(5, 16));
  CHECK(dyadic_floor(-third, 4) == make_rational(-6, 16));
}

TEST_CASE("squarefree part and rational square roots") {
  CHECK(squarefree_part(72) == 2);
  CHECK(squarefree_part(-75) == -3);
  CHECK(squarefree_part(1) == 1);
  Rational r;
  CHECK(rational_sqrt(Rational(49, 16), r));
  CHECK(r == Rational(7, 4));
  CHECK_FALSE(rational_sqrt(Rational(3), r));
  CHECK_FALSE(rational_sqrt(Rational(-4), r));
}

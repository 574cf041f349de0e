#include "doctest.h"

#include "semiarith/field/enclosure.hpp"
#include "semiarith/field/quad_field.hpp"
#include "semiarith/field/tower.hpp"

#include <cmath>
#include <random>

using namespace semiarith;
using namespace semiarith::field;

namespace {

const QuadField K3(3);

QuadElem q3(const Rational& a, const Rational& b) { return QuadElem(K3, a, b); }

Rational from_double(double x) { return Rational(x); }

}  // namespace

TEST_CASE("enclosure of 2 + sqrt3") {
  const RealEnclosure e = embed_real(q3(2, 1), 0, 1e-12);
  CHECK(e.width() < Rational(1e-12));
  CHECK(e.lo * e.lo - 4 * e.lo + 1 <= 0);  // lo <= root of x^2 - 4x + 1
  CHECK(e.hi * e.hi - 4 * e.hi + 1 >= 0);
  CHECK(e.midpoint() == doctest::Approx(3.7320508075688772));
  const RealEnclosure c = embed_real(q3(2, 1), 1, 1e-12);
  CHECK(c.midpoint() == doctest::Approx(0.2679491924311228));
}

TEST_CASE("rational values give point enclosures") {
  const RealEnclosure e = embed_real(q3(1, 0), 0);
  CHECK(e.lo == 1);
  CHECK(e.hi == 1);
  CHECK(e.certain_sign() == 1);
  CHECK(embed_real(TowerElem(q3(0, 0)), 2).certain_sign() == 0);
}

TEST_CASE("tower enclosures contain the true value") {
  // eta_1 = (2 - sqrt3) + sqrt(1 + (2 - sqrt3)^2) = 0.267949... + 1.035276...
  const QuadElem inv = q3(2, -1);
  const TowerElem eta(inv, q3(1, 0), q3(1, 0) + inv * inv);
  const double want[4] = {
      0.2679491924311228 + std::sqrt(1 + 0.2679491924311228 * 0.2679491924311228),
      3.7320508075688772 + std::sqrt(1 + 3.7320508075688772 * 3.7320508075688772),
      0.2679491924311228 - std::sqrt(1 + 0.2679491924311228 * 0.2679491924311228),
      3.7320508075688772 - std::sqrt(1 + 3.7320508075688772 * 3.7320508075688772)};
  for (int w = 0; w < 4; ++w) {
    CAPTURE(w);
    const RealEnclosure e = embed_real(eta, w, 1e-14);
    CHECK(e.width() <= from_double(1e-14));
    CHECK(e.midpoint() == doctest::Approx(want[w]).epsilon(1e-14));
    CHECK(e.certain_sign() == (want[w] > 0 ? 1 : -1));
  }
}

TEST_CASE("refine at least halves the width and stays nested") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int t = 0; t < 60; ++t) {
    const TowerElem x(q3(c(rng), c(rng)), q3(c(rng), c(rng)), q3(5, 1));
    for (int w = 0; w < 4; ++w) {
      RealEnclosure e = embed_real_bits(x, w, 4);
      for (int r = 0; r < 6; ++r) {
        const RealEnclosure next = refine(x, w, e);
        CHECK(next.lo >= e.lo);
        CHECK(next.hi <= e.hi);
        CHECK(next.width() * 2 <= e.width());
        e = next;
      }
      CHECK(e.midpoint() == doctest::Approx(to_double(x, w)).epsilon(1e-6));
    }
  }
}

TEST_CASE("intersect and overlaps") {
  const RealEnclosure a{0, 2}, b{1, 3};
  CHECK(a.overlaps(b));
  const RealEnclosure c = intersect(a, b);
  CHECK(c.lo == 1);
  CHECK(c.hi == 2);
  CHECK_FALSE(a.overlaps(RealEnclosure{3, 4}));
  CHECK(RealEnclosure{-2, -1}.certain_sign() == -1);
  CHECK(RealEnclosure{-1, 1}.certain_sign() == 0);
}

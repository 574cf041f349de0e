#include "doctest.h"

#include "semiarith/errors.hpp"
#include "semiarith/field/enclosure.hpp"
#include "semiarith/field/min_poly.hpp"
#include "semiarith/field/quad_field.hpp"
#include "semiarith/field/tower.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

using namespace semiarith;
using namespace semiarith::field;

namespace {

const QuadField K3(3);

QuadElem q3(const Rational& a, const Rational& b) { return QuadElem(K3, a, b); }

// eta = 1/eps + sqrt(1 + 1/eps^2) with eps = (2 + sqrt3)^n; tau = eta^2.
TowerElem eta_of(int n) {
  const QuadElem inv = inverse(pow(q3(2, 1), n));
  return TowerElem(inv, q3(1, 0), q3(1, 0) + inv * inv);
}

// Monic polynomial with the given real roots, expanded in doubles.
std::vector<double> expand(const std::vector<double>& roots) {
  std::vector<double> c{1.0};  // descending
  for (double r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= r * c[i - 1];
  }
  return c;
}

}  // namespace

TEST_CASE("tower arithmetic") {
  const TowerElem r = TowerElem::radical(q3(2, 0), q3(1, 0));  // sqrt 2
  CHECK((r * r) == TowerElem(q3(2, 0)));
  const TowerElem x(q3(1, 1), q3(3, 0), q3(2, 0));
  CHECK((x * inverse(x)) == TowerElem(q3(1, 0)));
  CHECK((x / x) == TowerElem(q3(1, 0)));
  CHECK(relative_norm(x) == q3(1, 1) * q3(1, 1) - q3(18, 0));
  CHECK_THROWS_AS(x + TowerElem::radical(q3(3, 0), q3(1, 0)), UnsupportedTower);
  CHECK_THROWS_AS(TowerElem(q3(1, 0), q3(1, 0), q3(1, -1)), InvalidArgument);
  CHECK_THROWS_AS(inverse(TowerElem(q3(0, 0))), DivisionByZero);
}

TEST_CASE("as_base detects square radicands") {
  const TowerElem x(q3(1, 0), q3(2, 0), q3(7, 4));  // 1 + 2 (2 + sqrt3)
  REQUIRE(as_base(x).has_value());
  CHECK(*as_base(x) == q3(5, 2));
  CHECK_FALSE(as_base(eta_of(1)).has_value());
}

TEST_CASE("tower signs match doubles") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int i = 0; i < 300; ++i) {
    const TowerElem x(q3(c(rng), c(rng)), q3(c(rng), c(rng)), q3(5, 2));
    for (int w = 0; w < 4; ++w) {
      const double v = to_double(x, w);
      if (std::abs(v) > 1e-9) CHECK(sign(x, w) == (v > 0 ? 1 : -1));
      else CHECK(sign(x, w) == 0);
    }
  }
}

TEST_CASE("minimal polynomials of the family elements") {
  // tau_1 = eta^2: (x^2 - s1 x + 1)(x^2 - s2 x + 1), s1 + s2 = 60, s1 s2 + 2 = 134.
  const TowerElem eta = eta_of(1);
  const TowerElem tau = eta * eta;
  CHECK(min_poly_tower(tau) == IntPolynomial::from_descending({1, -60, 134, -60, 1}));
  CHECK(min_poly_tower(tau).is_palindromic());
  const TowerElem tr_a = TowerElem::radical(q3(4, 0) + pow(q3(2, 1), 2), q3(1, 0));
  CHECK(min_poly_tower(tr_a) == IntPolynomial::from_descending({1, 0, -22, 0, 73}));
  CHECK(min_poly_tower(TowerElem(q3(3, 0))) == IntPolynomial::from_descending({1, -3}));
  CHECK(min_poly_tower(TowerElem(q3(2, 1))) == IntPolynomial::from_descending({1, -4, 1}));
  // sqrt(7 + 4 sqrt3) = 2 + sqrt3 lies in the base field.
  CHECK(min_poly_tower(TowerElem::radical(q3(7, 4), q3(1, 0))) ==
        IntPolynomial::from_descending({1, -4, 1}));
}

TEST_CASE("minimal polynomials over Q") {
  const QuadField Q = QuadField::rationals();
  const TowerElem r2 = TowerElem::radical(QuadElem(Q, 2), QuadElem(Q, 1));
  CHECK(r2.embedding_count() == 2);
  CHECK(min_poly_tower(r2) == IntPolynomial::from_descending({1, 0, -2}));
  CHECK(to_double(r2, 1) == doctest::Approx(-std::sqrt(2.0)));
}

TEST_CASE("non-integral elements") {
  CHECK_THROWS_AS(min_poly_tower(TowerElem(q3(Rational(1, 2), Rational(1, 2)))), NonIntegral);
  CHECK_FALSE(is_algebraic_integer(q3(Rational(1, 2), Rational(1, 2))));
  CHECK(is_algebraic_integer(eta_of(2)));
  const TowerElem half = TowerElem::radical(q3(2, 0), q3(Rational(1, 2), 0));
  CHECK_FALSE(is_algebraic_integer(half));
}

TEST_CASE("min poly agrees with a numeric conjugate expansion") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    std::vector<double> roots;
    for (double e : {std::pow(2 + std::sqrt(3.0), n), std::pow(2 - std::sqrt(3.0), n)}) {
      for (double sgn : {1.0, -1.0}) {
        const double eta = 1 / e + sgn * std::sqrt(1 + 1 / (e * e));
        roots.push_back(eta * eta);
      }
    }
    const auto numeric = expand(roots);
    const TowerElem eta = eta_of(n);
    const auto exact = min_poly_tower(eta * eta).descending();
    REQUIRE(exact.size() == numeric.size());
    for (std::size_t i = 0; i < exact.size(); ++i)
      CHECK(exact[i].get_d() == doctest::Approx(numeric[i]).epsilon(1e-9));
  }
}

TEST_CASE("conjugate elements share a minimal polynomial") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int i = 0; i < 50; ++i) {
    const QuadElem u = q3(c(rng), c(rng)), v = q3(c(rng), c(rng));
    if (v.is_zero()) continue;
    const QuadElem s = q3(7, 1);
    const TowerElem x(u, v, s);
    const TowerElem y(galois_conj(u), galois_conj(v), galois_conj(s));
    const TowerElem z(u, -v, s);
    CHECK(minimal_polynomial(x) == minimal_polynomial(y));
    CHECK(minimal_polynomial(x) == minimal_polynomial(z));
    // Every embedding value is a root.
    const RatPoly p = minimal_polynomial(x);
    for (int w = 0; w < 4; ++w) {
      const RealEnclosure e = embed_real(x, w, 1e-20);
      double scale = 0;
      for (const Rational& a : p.coefficients()) scale = std::max(scale, std::abs(a.get_d()));
      double val = 0;
      for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
        val = val * e.midpoint() + it->get_d();
      CHECK(std::abs(val) < 1e-6 * scale * std::pow(1 + std::abs(e.midpoint()), p.degree()));
    }
  }
}

TEST_CASE("to_string") {
  const TowerElem x(q3(1, 0), q3(0, 2), q3(2, 0));
  CHECK(to_string(x) == "(1) + (2 * sqrt(3)) * sqrt(2)");
}

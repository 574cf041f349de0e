#include "doctest.h"

#include "semiarith/errors.hpp"
#include "semiarith/field/polynomial.hpp"
#include "semiarith/field/roots.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace semiarith;
using namespace semiarith::field;

namespace {

// Companion-matrix eigenvalues in double precision.
Eigen::VectorXcd companion_roots(const IntPolynomial& p) {
  const int n = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coefficients()[static_cast<std::size_t>(i)].get_d();
  return Eigen::EigenSolver<Eigen::MatrixXd>(c, false).eigenvalues();
}

double oracle_mahler(const IntPolynomial& p) {
  double m = 1;
  for (const auto& z : companion_roots(p)) m *= std::max(1.0, std::abs(z));
  return m;
}

double oracle_house(const IntPolynomial& p) {
  double h = 0;
  for (const auto& z : companion_roots(p)) h = std::max(h, std::abs(z));
  return h;
}

IntPolynomial random_monic(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Integer> a;
  for (int i = 0; i < degree; ++i) a.emplace_back(c(rng));
  a.emplace_back(1);
  return IntPolynomial(a);
}

}  // namespace

TEST_CASE("house examples") {
  CHECK(house(IntPolynomial::from_descending({1, -3, 1})) ==
        doctest::Approx(2.6180339887498948482).epsilon(1e-12));
  CHECK(house(IntPolynomial::from_descending({1, -1})) == doctest::Approx(1.0).epsilon(1e-12));
  const double omega1 = house(IntPolynomial::from_descending({1, -60, 134, -60, 1}));
  CHECK(std::abs(omega1 - 57.695480540981037425) < 1e-10);
}

TEST_CASE("Lehmer's polynomial") {
  const auto lehmer = IntPolynomial::from_descending({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  const double m = mahler_measure(lehmer);
  CHECK(std::abs(m - 1.1762808182599175065) < 1e-10);
  CHECK(std::abs(m - oracle_mahler(lehmer)) < 1e-9);
}

TEST_CASE("repeated and cyclotomic roots") {
  const auto sq = IntPolynomial::from_descending({1, -4, 4});  // (x - 2)^2
  CHECK(mahler_measure(sq) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(house(sq) == doctest::Approx(2.0).epsilon(1e-12));
  const auto cyc = IntPolynomial::from_descending({1, 0, 0, 0, 0, 0, -1});  // x^6 - 1
  CHECK(mahler_measure(cyc) == doctest::Approx(1.0).epsilon(1e-12));
  const auto mixed = IntPolynomial::from_descending({1, -3, 1}) * IntPolynomial::from_descending({1, -3, 1}) *
                     IntPolynomial::from_descending({1, 0, 1});
  CHECK(mahler_measure(mixed) == doctest::Approx(2.6180339887498948482 * 2.6180339887498948482).epsilon(1e-12));
}

TEST_CASE("isolated disks are disjoint and match the companion oracle") {
  std::mt19937 rng(41);
  for (int t = 0; t < 40; ++t) {
    const IntPolynomial p = random_monic(rng, 2 + t % 6);
    const auto disks = isolate_roots(p.to_rational(), Rational(1, 1000000));
    int total = 0;
    for (std::size_t i = 0; i < disks.size(); ++i) {
      total += disks[i].multiplicity;
      for (std::size_t j = i + 1; j < disks.size(); ++j) {
        GaussRational d{disks[i].center.re - disks[j].center.re, disks[i].center.im - disks[j].center.im};
        const Rational r = disks[i].radius + disks[j].radius;
        CHECK(d.abs2() > r * r);
      }
    }
    CHECK(total == p.degree());
    for (const auto& z : companion_roots(p)) {
      double best = 1e300;
      for (const auto& disk : disks) best = std::min(best, std::abs(disk.approx() - z));
      CHECK(best < 1e-5);
    }
  }
}

TEST_CASE("Mahler measure properties on random quartics") {
  std::mt19937 rng(43);
  for (int t = 0; t < 30; ++t) {
    const IntPolynomial p = random_monic(rng, 4), q = random_monic(rng, 4);
    const double mp = mahler_measure(p), mq = mahler_measure(q);
    CHECK(mp >= 1.0 - 1e-12);
    CHECK(mp == doctest::Approx(oracle_mahler(p)).epsilon(1e-7));
    CHECK(house(p) == doctest::Approx(oracle_house(p)).epsilon(1e-7));
    CHECK(mahler_measure(p * q) == doctest::Approx(mp * mq).epsilon(1e-10));
  }
}

TEST_CASE("certified enclosures honor the tolerance") {
  const auto p = IntPolynomial::from_descending({1, -60, 134, -60, 1});
  const RealEnclosure h = house_enclosure(p, 1e-15);
  CHECK(h.width() <= Rational(1e-15));
  const RealEnclosure m = mahler_enclosure(p, 1e-12);
  CHECK(m.midpoint() == doctest::Approx(57.695480540981037425 * 1.6983963724170997529).epsilon(1e-12));
}

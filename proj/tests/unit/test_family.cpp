#include "doctest.h"

#include "semiarith/errors.hpp"
#include "semiarith/family/gamma.hpp"
#include "semiarith/field/enclosure.hpp"
#include "semiarith/field/min_poly.hpp"
#include "semiarith/field/roots.hpp"

#include <chrono>
#include <cmath>

using namespace semiarith;
using namespace semiarith::family;
using field::QuadElem;
using field::Rational;

namespace {

// Quadratic-formula oracle: tau and omega are the roots > 0 of
// x^2 - s x + 1 with s = 2 + 4 eps^-2 and s = 2 + 4 eps^2.
double larger_root(double s) { return (s + std::sqrt(s * s - 4)) / 2; }

const double kStretch[8] = {7.6558382921954598447, 46.397693300595027224, 241.41944189391909465,
                            1156.4055634313477862, 5269.2181138818148524, 23223.402548560090115,
                            99951.119402579986913, 422585.04869414368383};

}  // namespace

TEST_CASE("first member reproduces the frozen data") {
  const auto start = std::chrono::steady_clock::now();
  const FamilyRecord r = build_gamma(1);
  CHECK(r.tau_min_poly == IntPolynomial::from_descending({1, -60, 134, -60, 1}));
  const double eps = 2 + std::sqrt(3.0);
  CHECK(std::abs(r.tau_value - larger_root(2 + 4 / (eps * eps))) < 1e-9);
  CHECK(std::abs(r.omega - larger_root(2 + 4 * eps * eps)) < 1e-9);
  CHECK(std::abs(r.tau_value - 1.6983963724170997529) < 1e-12);
  CHECK(std::abs(r.omega - 57.695480540981037425) < 1e-10);
  CHECK(std::abs(r.stretch_lb - std::log(r.omega) / std::log(r.tau_value)) < 1e-9);
  CHECK(std::abs(r.stretch_lb - kStretch[0]) < 1e-9);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
}

TEST_CASE("every member: coarea, dimension, witness, symbol") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const FamilyRecord r = build_gamma(n);
    CHECK(r.arithmetic_dimension == 2);
    CHECK(r.witness_ok);
    CHECK(std::abs(r.coarea - M_PI / 3) < 1e-15);
    const QuadElem e = r.epsilon;
    CHECK(r.symbol.a == QuadElem(e.field(), 4) + e * e);
    CHECK(r.symbol.b == -(QuadElem(e.field(), 1) + e * e));
    CHECK(r.tau_min_poly.is_palindromic());
    CHECK(r.tau_min_poly.degree() == 4);
    CHECK(std::abs(r.stretch_lb - kStretch[n - 1]) < 1e-9 * kStretch[n - 1]);
  }
}

TEST_CASE("exact identities for all supported n") {
  for (int n : {1, 2, 5, 13, 30}) {
    CAPTURE(n);
    const FamilyRecord r = build_gamma(n);
    const TowerElem lam_sum = r.lambda + field::inverse(r.lambda);
    CHECK(lam_sum * lam_sum == TowerElem(QuadElem(r.epsilon.field(), 4) + r.epsilon * r.epsilon));
    CHECK(r.eta - field::inverse(r.eta) == TowerElem(Rational(2) * field::inverse(r.epsilon)));
    CHECK(r.stretch_lb > 1);
    CHECK(r.witness_ok);
  }
  CHECK_THROWS_AS(build_gamma(0), InvalidArgument);
  CHECK_THROWS_AS(build_gamma(31), InvalidArgument);
}

TEST_CASE("roots of tau_min_poly are tau, omega and their inverses") {
  for (int n = 1; n <= 4; ++n) {
    const FamilyRecord r = build_gamma(n);
    const auto disks = field::isolate_roots(r.tau_min_poly.to_rational(), Rational(1, 1000000000));
    REQUIRE(disks.size() == 4);
    const double want[4] = {r.tau_value, 1 / r.tau_value, r.omega, 1 / r.omega};
    for (double w : want) {
      bool found = false;
      for (const auto& d : disks) found = found || std::abs(d.approx() - std::complex<double>(w, 0)) < 1e-8 * (1 + w);
      CHECK(found);
    }
  }
}

TEST_CASE("traces generate the base field and are integral") {
  for (int n = 1; n <= 6; ++n) {
    const traces::TraceData t = family_traces(n);
    CHECK(traces::invariant_trace_field(t).field == field::QuadField(3));
    CHECK(field::is_algebraic_integer(t.tr_a()));
    CHECK(field::is_algebraic_integer(t.tr_b()));
    CHECK(field::is_algebraic_integer(t.tr_ab()));
    CHECK(field::is_algebraic_integer(TowerElem(t.tr_a_sq())));
  }
}

TEST_CASE("Galois conjugation swaps eps and 1/eps") {
  const FamilyRecord r = build_gamma(2);
  const QuadElem e = r.epsilon;
  // The conjugate of s1 = 2 + 4 eps^-2 is s2 = 2 + 4 eps^2.
  const QuadElem s1 = QuadElem(e.field(), 2) + Rational(4) * field::inverse(e * e);
  CHECK(field::galois_conj(s1) == QuadElem(e.field(), 2) + Rational(4) * e * e);
  const traces::TraceData t = family_traces(2);
  const traces::TraceData c = traces::galois_conj(t);
  CHECK(c.tr_a_sq() == field::galois_conj(t.tr_a_sq()));
}

TEST_CASE("coarea_from_signature") {
  CHECK(coarea_from_signature(0, {2, 2, 2, 3}, 0) == doctest::Approx(M_PI / 3).epsilon(1e-15));
  CHECK(coarea_from_signature(2, {}, 0) == doctest::Approx(4 * M_PI).epsilon(1e-15));
  CHECK(std::abs(coarea_from_signature(0, {2, 3, 7}, 0) - 0.14959965017094253516) < 1e-15);
  CHECK_THROWS_AS(coarea_from_signature(0, {2, 2, 2}, 0), InvalidArgument);
  CHECK_THROWS_AS(coarea_from_signature(1, {}, 0), InvalidArgument);
  CHECK_THROWS_AS(coarea_from_signature(0, {1, 5}, 0), InvalidArgument);
}

TEST_CASE("stretch divergence") {
  const StretchTable t = stretch_divergence_table(8);
  REQUIRE(t.records.size() == 8);
  for (std::size_t i = 1; i < t.records.size(); ++i) CHECK(t.records[i].stretch_lb > t.records[i - 1].stretch_lb);
  CHECK(t.growth_ratio == doctest::Approx(kStretch[7] / kStretch[0]).epsilon(1e-9));
  const double e0 = 2 + std::sqrt(3.0);
  for (const FamilyRecord& r : t.records) {
    if (r.n >= 3) CHECK(r.tau_minus_one < 3 * std::pow(e0, -r.n));
  }
  CHECK_THROWS_AS(stretch_divergence_table(1), InvalidArgument);
}

TEST_CASE("stretch stays accurate for large n") {
  const FamilyRecord r = build_gamma(30);
  const double e = std::pow(2 + std::sqrt(3.0), 30);
  // tau - 1 ~ 2/eps and omega ~ 4 eps^2.
  CHECK(r.tau_minus_one == doctest::Approx(2 / e).epsilon(1e-9));
  CHECK(r.stretch_lb == doctest::Approx(std::log(r.omega) / std::log1p(r.tau_minus_one)).epsilon(1e-14));
}

TEST_CASE("numeric realization cross-check") {
  const Crosscheck c = realize_and_crosscheck(1);
  const double eps = 2 + std::sqrt(3.0);
  CHECK(std::abs(c.tr_a_numeric - std::sqrt(4 + eps * eps)) < 1e-8);
  CHECK(std::abs(c.length_a - 2 * std::asinh(eps / 2)) < 1e-8);
  CHECK(c.relation_residual < 1e-8);
  for (int n = 2; n <= kMaxRealizeN; ++n) CHECK(realize_and_crosscheck(n).worst_error < 1e-8);
  CHECK_THROWS_AS(realize_and_crosscheck(kMaxRealizeN + 1), InvalidArgument);
}

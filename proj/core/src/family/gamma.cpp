#include "semiarith/family/gamma.hpp"

#include "semiarith/bounds/bounds.hpp"
#include "semiarith/errors.hpp"
#include "semiarith/field/enclosure.hpp"
#include "semiarith/field/min_poly.hpp"
#include "semiarith/field/roots.hpp"
#include "semiarith/hyperbolic/trirectangle.hpp"
#include "semiarith/traces/trace_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace semiarith::family {

using field::QuadField;
using field::Rational;

namespace {

const QuadField& k3() {
  static const QuadField k(3);
  return k;
}

QuadElem q(const Rational& a, const Rational& b = 0) { return QuadElem(k3(), a, b); }

void check(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure("family identity failed: " + what);
}

// Value under embedding 0 with relative accuracy ~1e-16.
double embed_accurate(const TowerElem& x) {
  double tol = 1e-12;
  for (int round = 0; round < 12; ++round) {
    const field::RealEnclosure e = field::embed_real(x, 0, tol);
    const double mid = e.midpoint();
    if (e.width() <= Rational(std::abs(mid) * 1e-17)) return mid;
    if (e.certain_sign() == 0 && e.lo == e.hi) return mid;
    tol = std::max(std::abs(mid) * 1e-18, tol * 1e-10);
  }
  throw VerificationFailure("enclosure did not reach the requested accuracy");
}

IntPolynomial tau_poly(const QuadElem& eps) {
  const QuadElem ei = field::inverse(eps);
  const QuadElem s1 = q(2) + Rational(4) * ei * ei;
  const QuadElem s2 = field::galois_conj(s1);
  const QuadElem sum = s1 + s2, prod = s1 * s2 + Rational(2);
  check(sum.is_rational() && prod.is_rational(), "symmetric functions of tau rational");
  // (x^2 - s1 x + 1)(x^2 - s2 x + 1)
  return field::to_integer_polynomial(field::RatPoly({1, -sum.a(), prod.a(), -sum.a(), 1}));
}

}  // namespace

traces::TraceData family_traces(int n) {
  if (n < 1 || n > kMaxExactN) throw InvalidArgument("family index must lie in 1.." + std::to_string(kMaxExactN));
  const QuadElem eps = field::pow(q(2, 1), n), ei = field::inverse(eps);
  const QuadElem sa = q(4) + eps * eps, sab = q(1) + ei * ei;
  const TowerElem tr_a = TowerElem::radical(sa, q(1));
  const TowerElem tr_b = TowerElem::radical(sa * sab, q(1));
  // tr AB from the product trA trB trAB = 2 (4 + eps^2)(1 + eps^-2), with
  // trA trB = (4 + eps^2) sqrt(1 + eps^-2).
  const TowerElem product(Rational(2) * sa * sab);
  const TowerElem ab_prod = TowerElem::radical(sab, sa);
  const traces::TraceAlgebra alg(k3(), {tr_a, tr_b, ab_prod});
  check(alg.equal(alg.mul(alg.embed(tr_a), alg.embed(tr_b)), alg.embed(ab_prod)), "trA trB");
  const TowerElem tr_ab = product / ab_prod;
  return traces::TraceData(tr_a, tr_b, tr_ab, q(1));
}

double coarea_from_signature(int genus, const std::vector<int>& orders, int cusps) {
  if (genus < 0 || cusps < 0) throw InvalidArgument("genus and cusp count must be nonnegative");
  double chi = 2.0 * genus - 2.0 + cusps;
  for (int m : orders) {
    if (m < 2) throw InvalidArgument("cone orders must be at least 2");
    chi += 1.0 - 1.0 / m;
  }
  if (!(chi > 1e-12)) throw InvalidArgument("signature is not hyperbolic");
  return 2.0 * M_PI * chi;
}

FamilyRecord build_gamma(int n) {
  const traces::TraceData td = family_traces(n);
  const QuadElem eps = field::pow(q(2, 1), n), ei = field::inverse(eps);
  const QuadElem sa = q(4) + eps * eps, sab = q(1) + ei * ei;

  const TowerElem lambda(eps * Rational(1, 2), q(Rational(1, 2)), sa);
  const TowerElem lambda_inv(-eps * Rational(1, 2), q(Rational(1, 2)), sa);
  check(lambda * lambda_inv == TowerElem(q(1)), "lambda lambda^-1 = 1");
  const TowerElem tr_a = lambda + lambda_inv;
  check(tr_a == td.tr_a(), "trA = lambda + 1/lambda");
  check(tr_a * tr_a == TowerElem(sa), "(lambda + 1/lambda)^2 = 4 + eps^2");

  const TowerElem eta(ei, q(1), sab);
  const TowerElem eta_inv = field::inverse(eta);
  check(eta - eta_inv == TowerElem(Rational(2) * ei), "eta - 1/eta = 2/eps");
  check(eta + eta_inv == td.tr_ab(), "trAB = eta + 1/eta");
  const TowerElem tau = eta * eta;

  const IntPolynomial poly = tau_poly(eps);
  check(poly == field::min_poly_tower(tau), "tau_min_poly is the minimal polynomial of tau");
  check(poly.is_palindromic(), "tau_min_poly palindromic");

  const double tau_minus_one = embed_accurate(tau - TowerElem(q(1)));
  // Closed form 1 + 2 eps^2 + 2 eps sqrt(1 + eps^2) against the house.
  const double omega_closed = embed_accurate(TowerElem(q(1) + Rational(2) * eps * eps, Rational(2) * eps, q(1) + eps * eps));
  const double omega = field::house(poly, 1e-12 * omega_closed);
  if (std::abs(omega - omega_closed) > 1e-10 * omega_closed)
    throw VerificationFailure("house of tau disagrees with the closed form at n = " + std::to_string(n));

  const double stretch = bounds::spectral_stretch_lb({bounds::SpectrumEntry::from_excess(tau_minus_one, omega)});

  std::vector<QuadElem> hints = traces::trace_hints(td);
  hints.push_back(eps);
  const traces::HilbertSymbol symbol =
      traces::square_class_reduce(traces::invariant_quaternion_symbol(td), hints);
  check(traces::invariant_trace_field(td).field == k3(), "invariant trace field is Q(sqrt 3)");
  const traces::PlaceSplitReport places = traces::real_place_splitting(symbol);
  const QuadElem w = q(0, Rational(1, 3));

  return FamilyRecord{n,
                      eps,
                      lambda,
                      eta,
                      tau,
                      td.tr_a(),
                      td.tr_b(),
                      td.tr_ab(),
                      poly,
                      1.0 + tau_minus_one,
                      tau_minus_one,
                      omega,
                      stretch,
                      coarea_from_signature(0, {2, 2, 2, 3}, 0),
                      places.arithmetic_dimension,
                      symbol,
                      places,
                      traces::verify_split_witness(symbol, w, w)};
}

StretchTable stretch_divergence_table(int n_max) {
  if (n_max < 2) throw InvalidArgument("n_max must be at least 2");
  StretchTable t;
  for (int n = 1; n <= n_max; ++n) {
    t.records.push_back(build_gamma(n));
    if (n > 1 && !(t.records[n - 1].stretch_lb > t.records[n - 2].stretch_lb))
      throw VerificationFailure("stretch lower bound is not increasing at n = " + std::to_string(n));
  }
  t.growth_ratio = t.records.back().stretch_lb / t.records.front().stretch_lb;
  return t;
}

Crosscheck realize_and_crosscheck(int n) {
  if (n < 1 || n > kMaxRealizeN) throw InvalidArgument("numeric realization supports 1 <= n <= 5");
  const FamilyRecord rec = build_gamma(n);
  namespace hy = hyperbolic;
  const double eps = field::to_double(rec.epsilon, 0);
  const hy::Trirectangle tri = hy::solve_trirectangle(std::asinh(eps / 2.0), M_PI / 3.0);
  const hy::GroupRealization g = hy::realize_group(tri, 1e-8);

  Crosscheck c{};
  c.n = n;
  c.x = tri.x;
  c.y = tri.y;
  c.z = tri.z;
  c.tr_a_numeric = std::abs(g.A.trace());
  c.tr_b_numeric = std::abs(g.B.trace());
  c.tr_ab_numeric = std::abs((g.A * g.B).trace());
  c.tr_a_exact = field::to_double(rec.tr_a, 0);
  c.tr_b_exact = field::to_double(rec.tr_b, 0);
  c.tr_ab_exact = field::to_double(rec.tr_ab, 0);
  c.length_a = hy::translation_length(g.A);
  c.length_b = hy::translation_length(g.B);
  c.length_ba = hy::translation_length(g.B * g.A);
  c.relation_residual = g.residual;
  auto rel = [](double num, double exact) { return std::abs(num - exact) / (1.0 + std::abs(exact)); };
  const double lambda = field::to_double(rec.lambda, 0);
  c.worst_error = std::max({rel(c.tr_a_numeric, c.tr_a_exact), rel(c.tr_b_numeric, c.tr_b_exact),
                            rel(c.tr_ab_numeric, c.tr_ab_exact), rel(c.length_a, 2.0 * tri.x),
                            rel(c.length_a, 2.0 * std::log(lambda)), rel(c.length_b, 2.0 * tri.z),
                            rel(c.length_ba, 2.0 * tri.y), rel(std::sinh(tri.y), 1.0 / eps), c.relation_residual});
  if (c.worst_error > 1e-8)
    throw VerificationFailure("numeric realization disagrees with exact data at n = " + std::to_string(n));
  return c;
}

}  // namespace semiarith::family

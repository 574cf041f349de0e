#include "semiarith/field/roots.hpp"

#include "semiarith/errors.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>

namespace semiarith::field {

namespace {

GaussRational operator+(const GaussRational& x, const GaussRational& y) { return {x.re + y.re, x.im + y.im}; }
GaussRational operator-(const GaussRational& x, const GaussRational& y) { return {x.re - y.re, x.im - y.im}; }
GaussRational operator*(const GaussRational& x, const GaussRational& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
GaussRational operator/(const GaussRational& x, const GaussRational& y) {
  const Rational n = y.abs2();
  if (n == 0) throw DivisionByZero();
  return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}

GaussRational evaluate(const RatPoly& p, const GaussRational& z) {
  GaussRational acc{0, 0};
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + GaussRational{p[i], 0};
  return acc;
}

GaussRational round_to(const GaussRational& z, unsigned bits) {
  return {dyadic_round(z.re, bits), dyadic_round(z.im, bits)};
}

std::vector<std::complex<double>> initial_estimates(const RatPoly& f) {
  const int n = f.degree();
  Eigen::VectorXd coeffs(n + 1);
  for (int i = 0; i <= n; ++i) coeffs(i) = f[i].get_d();
  std::vector<std::complex<double>> out;
  bool finite = coeffs.allFinite();
  if (finite) {
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(coeffs);
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) out.push_back(solver.roots()(i));
    finite = std::all_of(out.begin(), out.end(),
                         [](const std::complex<double>& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
  }
  if (!finite) {
    // Points on a circle of radius given by the Cauchy bound.
    double bound = 1;
    for (int i = 0; i < n; ++i) bound = std::max(bound, 1 + std::abs(f[i].get_d()));
    out.clear();
    for (int k = 0; k < n; ++k)
      out.push_back(std::polar(bound, 2 * M_PI * (k + 0.25) / n));
  }
  // Separate coincident estimates so the Weierstrass corrections exist.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(out[i] - out[j]) <= 1e-9 * (1 + std::abs(out[i])))
        out[i] += std::polar(1e-7 * (1 + std::abs(out[i])), 0.7 + static_cast<double>(i));
  return out;
}

// Roots of a monic squarefree polynomial via Weierstrass (Durand-Kerner)
// iteration in exact arithmetic.  Disks of radius deg * |W_i| around the
// iterates contain all roots; pairwise disjoint disks hold one root each.
std::vector<RootDisk> isolate_squarefree(const RatPoly& f, const Rational& max_radius) {
  const int n = f.degree();
  if (n == 1) return {RootDisk{{-f[0] / f[1], 0}, 0, 1}};

  const long target_bits = std::max(64L, -approx_log2(max_radius) + 16);
  unsigned bits = 64;
  std::vector<GaussRational> z;
  for (const auto& c : initial_estimates(f))
    z.push_back(round_to(GaussRational{Rational(c.real()), Rational(c.imag())}, bits));

  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<GaussRational> w(static_cast<std::size_t>(n));
    bool coincident = false;
    for (int i = 0; i < n; ++i) {
      GaussRational denom{1, 0};
      for (int j = 0; j < n; ++j)
        if (i != j) denom = denom * (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      if (denom.abs2() == 0) {
        coincident = true;
        break;
      }
      w[static_cast<std::size_t>(i)] = evaluate(f, z[static_cast<std::size_t>(i)]) / denom;
    }
    if (coincident) {
      for (int i = 0; i < n; ++i)
        z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] +
                                         GaussRational{Rational(i + 1, 1 << 20), Rational(2 * i + 1, 1 << 21)};
      continue;
    }

    const unsigned rbits = static_cast<unsigned>(std::max<long>(bits, target_bits)) + 8;
    std::vector<Rational> radius;
    long worst = -(1L << 30);
    for (const auto& wi : w) {
      const Rational a2 = wi.abs2();
      radius.push_back(n * sqrt_upper(a2, rbits));
      if (a2 != 0) worst = std::max(worst, approx_log2(a2) / 2);
    }

    bool ok = std::all_of(radius.begin(), radius.end(), [&](const Rational& r) { return r <= max_radius; });
    for (int i = 0; ok && i < n; ++i)
      for (int j = 0; ok && j < i; ++j) {
        const Rational sum = radius[static_cast<std::size_t>(i)] + radius[static_cast<std::size_t>(j)];
        ok = sum * sum < (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]).abs2();
      }
    if (ok) {
      std::vector<RootDisk> out;
      for (int i = 0; i < n; ++i)
        out.push_back(RootDisk{z[static_cast<std::size_t>(i)], radius[static_cast<std::size_t>(i)], 1});
      return out;
    }

    // Quadratic convergence: keep roughly twice the bits of the correction.
    bits = static_cast<unsigned>(std::clamp<long>(-2 * worst + 32, 64, std::max<long>(target_bits * 2, 64) + 64));
    for (int i = 0; i < n; ++i)
      z[static_cast<std::size_t>(i)] = round_to(z[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(i)], bits);
  }
  throw VerificationFailure("root isolation did not converge for " + to_string(f));
}

RealEnclosure max1(const RealEnclosure& x) {
  return {std::max(x.lo, Rational(1)), std::max(x.hi, Rational(1))};
}

}  // namespace

RealEnclosure RootDisk::modulus(unsigned bits) const {
  const Rational a2 = center.abs2();
  Rational lo = sqrt_lower(a2, bits) - radius;
  if (lo < 0) lo = 0;
  return {lo, sqrt_upper(a2, bits) + radius};
}

std::vector<RootDisk> isolate_roots(const RatPoly& p, const Rational& max_radius) {
  if (p.degree() < 1) throw InvalidArgument("degenerate polynomial (degree 0)");
  if (max_radius <= 0) throw InvalidArgument("radius bound must be positive");
  std::vector<RootDisk> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    for (auto disk : isolate_squarefree(factor, max_radius)) {
      disk.multiplicity = mult;
      out.push_back(std::move(disk));
    }
  }
  return out;
}

RealEnclosure house_enclosure(const IntPolynomial& p, double tol) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const Rational t(tol);
  Rational radius = t / 8;
  const RatPoly rp = p.to_rational();
  for (int round = 0; round < 64; ++round) {
    const unsigned bits = static_cast<unsigned>(std::max(64L, -approx_log2(radius) + 8));
    RealEnclosure h{0, 0};
    for (const auto& disk : isolate_roots(rp, radius)) {
      const RealEnclosure m = disk.modulus(bits);
      h = {std::max(h.lo, m.lo), std::max(h.hi, m.hi)};
    }
    if (h.width() < t) return h;
    radius /= 16;
  }
  throw VerificationFailure("house enclosure did not reach tolerance");
}

RealEnclosure mahler_enclosure(const IntPolynomial& p, double rel_tol) {
  if (!(rel_tol > 0)) throw InvalidArgument("tolerance must be positive");
  const Rational t(rel_tol);
  Rational radius = t / Rational(8 * p.degree());
  const RatPoly rp = p.to_rational();
  for (int round = 0; round < 64; ++round) {
    const unsigned bits = static_cast<unsigned>(std::max(64L, -approx_log2(radius) + 8));
    RealEnclosure m{1, 1};
    for (const auto& disk : isolate_roots(rp, radius)) {
      const RealEnclosure f = max1(disk.modulus(bits));
      for (int k = 0; k < disk.multiplicity; ++k) m = {m.lo * f.lo, m.hi * f.hi};
    }
    if (m.width() <= t * m.lo) return m;
    radius /= 16;
  }
  throw VerificationFailure("Mahler measure enclosure did not reach tolerance");
}

double house(const IntPolynomial& p, double tol) { return house_enclosure(p, tol).midpoint(); }

double mahler_measure(const IntPolynomial& p, double tol) { return mahler_enclosure(p, tol).midpoint(); }

}  // namespace semiarith::field

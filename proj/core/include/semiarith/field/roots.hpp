#pragma once

#include "semiarith/field/enclosure.hpp"
#include "semiarith/field/polynomial.hpp"

#include <complex>
#include <vector>

namespace semiarith::field {

/// Complex number with rational coordinates.
struct GaussRational {
  Rational re;
  Rational im;
  Rational abs2() const { return re * re + im * im; }
};

/// Disk |z - center| <= radius containing exactly `multiplicity` roots
/// (counted with multiplicity) and no other root of the polynomial.
struct RootDisk {
  GaussRational center;
  Rational radius;
  int multiplicity = 1;

  std::complex<double> approx() const { return {center.re.get_d(), center.im.get_d()}; }
  /// Enclosure of |root|.
  RealEnclosure modulus(unsigned bits) const;
};

/// Isolates all complex roots of p (degree >= 1).  Every returned disk has
/// radius <= max_radius and the disks are pairwise disjoint.
std::vector<RootDisk> isolate_roots(const RatPoly& p, const Rational& max_radius);

RealEnclosure house_enclosure(const IntPolynomial& p, double tol);
RealEnclosure mahler_enclosure(const IntPolynomial& p, double rel_tol);

/// max |root|, within absolute tolerance tol.
double house(const IntPolynomial& p, double tol = 1e-12);
/// prod max(1, |root|), within relative tolerance tol.
double mahler_measure(const IntPolynomial& p, double tol = 1e-12);

}  // namespace semiarith::field

#pragma once

#include "semiarith/field/quad_field.hpp"
#include "semiarith/field/tower.hpp"

namespace semiarith::field {

/// Closed interval [lo, hi] with dyadic endpoints (or an exact rational
/// point) known to contain a real number.
struct RealEnclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  double midpoint() const;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool overlaps(const RealEnclosure& other) const { return lo <= other.hi && other.lo <= hi; }
  /// +1 / -1 if the whole interval lies strictly on one side of zero, else 0.
  int certain_sign() const;
};

RealEnclosure intersect(const RealEnclosure& x, const RealEnclosure& y);

/// Enclosure at a fixed working precision of `bits` fractional bits.
RealEnclosure embed_real_bits(const QuadElem& x, int which, unsigned bits);
RealEnclosure embed_real_bits(const TowerElem& x, int which, unsigned bits);

/// Certified enclosure of the image under embedding `which`, width < tol.
RealEnclosure embed_real(const QuadElem& x, int which, double tol = 1e-12);
RealEnclosure embed_real(const TowerElem& x, int which, double tol = 1e-12);

/// One refinement round: returns an enclosure contained in `prev` with at
/// most half its width.
RealEnclosure refine(const TowerElem& x, int which, const RealEnclosure& prev);

}  // namespace semiarith::field

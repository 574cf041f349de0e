#pragma once

#include "semiarith/hyperbolic/hpoint.hpp"

namespace semiarith::hyperbolic {

/// Element of SL(2,R) acting by z -> (az + b)/(cz + d).
struct Isometry2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static Isometry2 identity() { return {}; }
  static Isometry2 diagonal(double lambda) { return {lambda, 0.0, 0.0, 1.0 / lambda}; }

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  HPoint operator()(const HPoint& p) const;
  Complex operator()(Complex z) const;
};

Isometry2 operator*(const Isometry2& g, const Isometry2& h);
Isometry2 inverse(const Isometry2& g);

/// Rescales to determinant 1; throws unless det > 0.
Isometry2 normalized(const Isometry2& g);

/// Max entry difference between g and +-h (equality as Moebius maps).
double mobius_distance(const Isometry2& g, const Isometry2& h);

/// The map z -> (z - p.x) / p.y sending p to i.
Isometry2 to_origin(const HPoint& p);

/// Counterclockwise rotation by theta about p.
Isometry2 elliptic(const HPoint& p, double theta);
Isometry2 half_turn(const HPoint& p);

/// 2 arccosh(|tr g| / 2) for hyperbolic g, 0 otherwise.
double translation_length(const Isometry2& g);

}  // namespace semiarith::hyperbolic

#pragma once

#include <complex>
#include <vector>

namespace semiarith::hyperbolic {

using Complex = std::complex<double>;

/// Point x + iy of the upper half-plane.
struct HPoint {
  double x = 0.0;
  double y = 1.0;

  HPoint() = default;
  HPoint(double x_, double y_);
  static HPoint from_complex(Complex z) { return HPoint(z.real(), z.imag()); }
  Complex to_complex() const { return {x, y}; }
};

/// Tangent vector at a point, in Euclidean coordinates of the half-plane.
using Tangent = Complex;

double dist(const HPoint& p, const HPoint& q);

/// Riemannian length |v| / y of a tangent vector at p.
double tangent_norm(const HPoint& p, Tangent v);

Tangent log_map(const HPoint& p, const HPoint& q);
HPoint exp_map(const HPoint& p, Tangent v);

/// Point of H^r with the sup metric.
struct ProductPoint {
  std::vector<HPoint> factors;
  int rank() const { return static_cast<int>(factors.size()); }
};

double dist(const ProductPoint& p, const ProductPoint& q);

}  // namespace semiarith::hyperbolic

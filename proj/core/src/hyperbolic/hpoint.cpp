#include "semiarith/hyperbolic/hpoint.hpp"

#include "semiarith/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace semiarith::hyperbolic {

namespace {

const Complex I(0.0, 1.0);

// Geodesic polar coordinates at i through the Cayley map z -> (z - i)/(z + i).
Tangent log_at_i(Complex q) {
  const Complex w = (q - I) / (q + I);
  const double r = std::abs(w);
  if (r == 0.0) return 0.0;
  const double len = 2.0 * std::atanh(r);
  return len * I * (w / r);
}

Complex exp_at_i(Tangent v) {
  const double len = std::abs(v);
  if (len == 0.0) return I;
  const Complex w = std::tanh(len / 2.0) * (v / (I * len));
  return I * (1.0 + w) / (1.0 - w);
}

}  // namespace

HPoint::HPoint(double x_, double y_) : x(x_), y(y_) {
  if (!(y_ > 0.0) || !std::isfinite(x_) || !std::isfinite(y_))
    throw InvalidArgument("point is not in the upper half-plane: y = " + std::to_string(y_));
}

double dist(const HPoint& p, const HPoint& q) {
  const double dx = p.x - q.x, dy = p.y - q.y;
  return 2.0 * std::asinh(std::hypot(dx, dy) / (2.0 * std::sqrt(p.y * q.y)));
}

double tangent_norm(const HPoint& p, Tangent v) { return std::abs(v) / p.y; }

Tangent log_map(const HPoint& p, const HPoint& q) {
  const Complex g = (q.to_complex() - p.x) / p.y;
  return p.y * log_at_i(g);
}

HPoint exp_map(const HPoint& p, Tangent v) {
  const Complex z = p.x + p.y * exp_at_i(v / p.y);
  return HPoint::from_complex(z);
}

double dist(const ProductPoint& p, const ProductPoint& q) {
  if (p.factors.size() != q.factors.size()) throw InvalidArgument("product points of different rank");
  double d = 0.0;
  for (std::size_t i = 0; i < p.factors.size(); ++i) d = std::max(d, dist(p.factors[i], q.factors[i]));
  return d;
}

}  // namespace semiarith::hyperbolic

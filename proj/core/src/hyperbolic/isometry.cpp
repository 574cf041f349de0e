#include "semiarith/hyperbolic/isometry.hpp"

#include "semiarith/errors.hpp"

#include <algorithm>
#include <cmath>

namespace semiarith::hyperbolic {

Complex Isometry2::operator()(Complex z) const { return (a * z + b) / (c * z + d); }

HPoint Isometry2::operator()(const HPoint& p) const { return HPoint::from_complex((*this)(p.to_complex())); }

Isometry2 operator*(const Isometry2& g, const Isometry2& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

Isometry2 inverse(const Isometry2& g) {
  const double det = g.det();
  return {g.d / det, -g.b / det, -g.c / det, g.a / det};
}

Isometry2 normalized(const Isometry2& g) {
  const double det = g.det();
  if (!(det > 0.0)) throw InvalidArgument("matrix does not preserve the upper half-plane");
  const double s = 1.0 / std::sqrt(det);
  return {g.a * s, g.b * s, g.c * s, g.d * s};
}

double mobius_distance(const Isometry2& g, const Isometry2& h) {
  auto diff = [&](double sgn) {
    return std::max({std::abs(g.a - sgn * h.a), std::abs(g.b - sgn * h.b), std::abs(g.c - sgn * h.c),
                     std::abs(g.d - sgn * h.d)});
  };
  return std::min(diff(1.0), diff(-1.0));
}

Isometry2 to_origin(const HPoint& p) {
  const double s = std::sqrt(p.y);
  return {1.0 / s, -p.x / s, 0.0, s};
}

Isometry2 elliptic(const HPoint& p, double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const Isometry2 rot{c, s, -s, c};
  const Isometry2 g = to_origin(p);
  return inverse(g) * rot * g;
}

Isometry2 half_turn(const HPoint& p) { return elliptic(p, M_PI); }

double translation_length(const Isometry2& g) {
  const double t = std::abs(normalized(g).trace());
  return t > 2.0 ? 2.0 * std::acosh(t / 2.0) : 0.0;
}

}  // namespace semiarith::hyperbolic

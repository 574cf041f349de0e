#include "semiarith/hyperbolic/trirectangle.hpp"

#include "semiarith/errors.hpp"

#include <algorithm>
#include <cmath>

namespace semiarith::hyperbolic {

Trirectangle solve_trirectangle(double x, double phi) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("trirectangle side x must be positive");
  if (!(phi > 0.0) || !(phi < M_PI / 2.0)) throw InvalidArgument("acute angle must lie in (0, pi/2)");
  const double c = std::cos(phi);
  if (c <= 0.0) throw InvalidArgument("degenerate trirectangle: cos(phi) = 0");
  Trirectangle t;
  t.x = x;
  t.phi = phi;
  t.y = std::asinh(c / std::sinh(x));
  t.z = std::acosh(std::cosh(x) * std::cosh(t.y));
  const double r1 = std::sinh(t.x) * std::sinh(t.y) - c;
  const double r2 = std::cosh(t.x) * std::cosh(t.y) - std::cosh(t.z);
  if (std::abs(r1) > 1e-12 || std::abs(r2) > 1e-12 * std::cosh(t.z))
    throw VerificationFailure("trirectangle relations not satisfied");
  return t;
}

namespace {

// Angle at v from the geodesic towards a to the geodesic towards b.
double signed_angle(const HPoint& v, const HPoint& a, const HPoint& b) {
  return std::arg(log_map(v, b) / log_map(v, a));
}

}  // namespace

TrirectangleVertices place_trirectangle(const Trirectangle& tri) {
  // Work first with O = i, P up the imaginary axis and R on the unit circle.
  const double ex = std::exp(tri.x);
  const double h = std::cosh(tri.x) * std::tanh(tri.y);
  const Complex o(0.0, 1.0);
  const Complex p(0.0, ex);
  const Complex r(std::tanh(tri.y), 1.0 / std::cosh(tri.y));
  const Complex q = ex * Complex(h, std::sqrt(std::max(0.0, 1.0 - h * h)));

  // Move Q to i, then rotate about i so that the direction towards P is +i.
  const HPoint qh = HPoint::from_complex(q);
  const Isometry2 g0 = to_origin(qh);
  const Tangent dir = log_map(HPoint(0.0, 1.0), g0(HPoint::from_complex(p)));
  const double turn = M_PI / 2.0 - std::arg(dir);
  const Isometry2 g = elliptic(HPoint(0.0, 1.0), turn) * g0;

  TrirectangleVertices v;
  v.O = g(HPoint::from_complex(o));
  v.P = g(HPoint::from_complex(p));
  v.Q = HPoint(0.0, 1.0);
  v.R = g(HPoint::from_complex(r));
  if (v.R.x < 0.0) {
    // Reflect across the imaginary axis so the quadrilateral lies at x > 0.
    v.O.x = -v.O.x;
    v.P.x = -v.P.x;
    v.R.x = -v.R.x;
  }
  v.P.x = 0.0;
  return v;
}

GroupRealization realize_from_vertices(const TrirectangleVertices& v, double phi, double tol) {
  GroupRealization out;
  out.vertices = v;
  out.X = half_turn(v.P);
  out.Y = half_turn(v.O);
  out.Z = half_turn(v.R);
  double theta = 2.0 * signed_angle(v.Q, v.P, v.R);
  if (std::abs(std::abs(theta) - 2.0 * phi) > 1e-9)
    throw VerificationFailure("vertex angle does not match phi");
  if (theta < 0.0) theta += 2.0 * M_PI;
  out.W = elliptic(v.Q, theta);
  out.A = out.X * out.Y;
  out.B = out.Z * out.X;

  const Isometry2 id = Isometry2::identity();
  const Isometry2 comm = out.A * out.B * inverse(out.A) * inverse(out.B);
  const Isometry2 w2 = out.W * out.W;
  out.residual = std::max(mobius_distance(out.X * out.Y * out.Z * out.W, id), mobius_distance(comm, inverse(w2)));
  if (std::abs(phi - M_PI / 3.0) < 1e-12) {
    out.residual = std::max({out.residual, mobius_distance(w2 * out.W, id), mobius_distance(comm, out.W),
                             mobius_distance(out.X, w2 * out.B * out.A)});
  }
  if (out.residual > tol)
    throw VerificationFailure("group relations fail: residual " + std::to_string(out.residual));
  return out;
}

GroupRealization realize_group(const Trirectangle& tri, double tol) {
  return realize_from_vertices(place_trirectangle(tri), tri.phi, tol);
}

std::array<DisplacementMatch, 3> match_displacements(const GroupRealization& g, const Trirectangle& tri) {
  const std::pair<const char*, Isometry2> elems[3] = {{"A", g.A}, {"B", g.B}, {"BA", g.B * g.A}};
  const std::pair<char, double> sides[3] = {{'x', 2 * tri.x}, {'y', 2 * tri.y}, {'z', 2 * tri.z}};
  std::array<DisplacementMatch, 3> out;
  for (int i = 0; i < 3; ++i) {
    const double len = translation_length(elems[i].second);
    DisplacementMatch m{elems[i].first, len, '?', 1e300};
    for (const auto& [name, target] : sides) {
      if (std::abs(len - target) < m.error) {
        m.side = name;
        m.error = std::abs(len - target);
      }
    }
    out[static_cast<std::size_t>(i)] = m;
  }
  return out;
}

}  // namespace semiarith::hyperbolic

#pragma once

#include "semiarith/hyperbolic/hpoint.hpp"
#include "semiarith/hyperbolic/isometry.hpp"

#include <array>
#include <string>

namespace semiarith::hyperbolic {

/// Quadrilateral with three right angles and one acute angle phi.
/// x and y are the sides meeting at the right-angle vertex opposite phi,
/// z the diagonal joining their other endpoints.
struct Trirectangle {
  double x = 0.0;
  double phi = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// sinh x sinh y = cos phi and cosh x cosh y = cosh z.
Trirectangle solve_trirectangle(double x, double phi);

/// Vertices in boundary order: O (opposite phi), P (end of side x),
/// Q (acute vertex), R (end of side y).
struct TrirectangleVertices {
  HPoint O, P, Q, R;
};

/// Canonical placement: Q = i with the side QP leaving Q straight up the
/// imaginary axis, the quadrilateral on the side of increasing x.
TrirectangleVertices place_trirectangle(const Trirectangle& tri);

struct GroupRealization {
  TrirectangleVertices vertices;
  Isometry2 X, Y, Z, W;  ///< half-turns at P, O, R; rotation by 2 phi at Q
  Isometry2 A, B;        ///< A = XY, B = ZX
  /// Worst Moebius-distance residual of XYZW = 1 and [A,B] = W^-2; when
  /// phi = pi/3 also W^3 = 1, [A,B] = W and X = W^2 BA.
  double residual = 0.0;
};

/// Builds the half-turns and the elliptic W from explicit vertices (any
/// placement).  Throws VerificationFailure if the relations fail by more than
/// tol.
GroupRealization realize_from_vertices(const TrirectangleVertices& v, double phi, double tol = 1e-9);
GroupRealization realize_group(const Trirectangle& tri, double tol = 1e-9);

/// Which side each translation length matches: entries for A, B, BA give
/// the name of the closest of 2x, 2y, 2z and the absolute error.
struct DisplacementMatch {
  std::string element;
  double length;
  char side;
  double error;
};
std::array<DisplacementMatch, 3> match_displacements(const GroupRealization& g, const Trirectangle& tri);

}  // namespace semiarith::hyperbolic

#pragma once

#include "semiarith/field/polynomial.hpp"
#include "semiarith/field/tower.hpp"

namespace semiarith::field {

/// prod over the (up to four) formal conjugates: (X^2 - 2uX + c)(X^2 - 2u'X + c')
/// with c = u^2 - v^2 s.  Rational coefficients, degree 2 * [K:Q].
RatPoly conjugate_product(const TowerElem& x);

/// Minimal polynomial over Q (monic, rational coefficients).
RatPoly minimal_polynomial(const QuadElem& x);
RatPoly minimal_polynomial(const TowerElem& x);

/// Minimal polynomial of an algebraic integer; throws NonIntegral when the
/// symmetric functions are not rational integers.
IntPolynomial min_poly_tower(const TowerElem& x);

bool is_algebraic_integer(const QuadElem& x);
bool is_algebraic_integer(const TowerElem& x);

}  // namespace semiarith::field

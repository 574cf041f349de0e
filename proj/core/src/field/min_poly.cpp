#include "semiarith/field/min_poly.hpp"

#include "semiarith/errors.hpp"

namespace semiarith::field {

namespace {

Rational rational_value(const QuadElem& x) {
  if (!x.is_rational()) throw VerificationFailure("symmetric function is not rational");
  return x.a();
}

}  // namespace

RatPoly minimal_polynomial(const QuadElem& x) {
  if (x.is_rational()) return RatPoly({-x.a(), Rational(1)});
  return RatPoly({norm(x), -trace(x), Rational(1)});
}

RatPoly conjugate_product(const TowerElem& x) {
  const QuadElem two(x.base(), 2);
  const QuadElem lin = -(two * x.u());
  const QuadElem cst = relative_norm(x);
  if (x.base().is_rational()) {
    RatPoly q({rational_value(cst), rational_value(lin), Rational(1)});
    return q * q;
  }
  const QuadElem lin_c = galois_conj(lin);
  const QuadElem cst_c = galois_conj(cst);
  // (X^2 + l X + c)(X^2 + l' X + c')
  return RatPoly({rational_value(cst * cst_c),
                  rational_value(lin * cst_c + lin_c * cst),
                  rational_value(cst + cst_c + lin * lin_c),
                  rational_value(lin + lin_c),
                  Rational(1)});
}

RatPoly minimal_polynomial(const TowerElem& x) {
  if (auto in_k = as_base(x)) return minimal_polynomial(*in_k);
  // sqrt(s) is not in K, so K(sqrt s) has degree 2[K:Q] and the conjugate
  // product is a power of the minimal polynomial.
  return squarefree_radical(conjugate_product(x));
}

IntPolynomial min_poly_tower(const TowerElem& x) {
  const RatPoly p = minimal_polynomial(x);
  if (!has_integer_coefficients(p))
    throw NonIntegral(to_string(x) + " is not an algebraic integer (minimal polynomial " + to_string(p) + ")");
  return to_integer_polynomial(p);
}

bool is_algebraic_integer(const QuadElem& x) { return is_integral(x); }

bool is_algebraic_integer(const TowerElem& x) {
  return has_integer_coefficients(minimal_polynomial(x));
}

}  // namespace semiarith::field

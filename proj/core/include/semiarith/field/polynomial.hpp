#pragma once

#include "semiarith/field/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace semiarith::field {

/// Dense polynomial over Q, coefficients in ascending order of degree.
/// The zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> ascending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  friend RatPoly operator+(RatPoly x, const RatPoly& y) { return x += y; }
  friend RatPoly operator-(RatPoly x, const RatPoly& y) { return x -= y; }
  friend RatPoly operator*(const RatPoly& x, const RatPoly& y);
  friend RatPoly operator*(RatPoly x, const Rational& q);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

RatPoly derivative(const RatPoly& p);
RatPoly make_monic(const RatPoly& p);
/// Euclidean division p = q * d + r.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& d);
/// Monic gcd (zero if both are zero).
RatPoly gcd(const RatPoly& p, const RatPoly& q);
/// Product of the distinct monic irreducible factors: p / gcd(p, p').
RatPoly squarefree_radical(const RatPoly& p);

/// Yun's squarefree decomposition: pairs (f_i, i) with p = lc * prod f_i^i,
/// each f_i monic and squarefree, pairwise coprime.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

/// Monic polynomial with integer coefficients.
class IntPolynomial {
 public:
  /// Coefficients in ascending order; the last one must be 1.
  explicit IntPolynomial(std::vector<Integer> ascending);
  /// Coefficients from the leading term down.
  static IntPolynomial from_descending(const std::vector<long long>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return c_; }
  std::vector<Integer> descending() const;

  RatPoly to_rational() const;
  bool is_palindromic() const;

  friend IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> c_;
};

/// Converts a monic rational polynomial with integral coefficients.
/// Throws NonIntegral otherwise.
IntPolynomial to_integer_polynomial(const RatPoly& p);
bool has_integer_coefficients(const RatPoly& p);

std::string to_string(const RatPoly& p);
std::string to_string(const IntPolynomial& p);

}  // namespace semiarith::field

#pragma once

#include "semiarith/field/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace semiarith::field {

/// Q(sqrt d) for squarefree d >= 2, or Q itself when d == 1.
class QuadField {
 public:
  explicit QuadField(std::int64_t d);
  static QuadField rationals() { return QuadField(1); }

  std::int64_t d() const { return d_; }
  bool is_rational() const { return d_ == 1; }
  /// Degree over Q; also the number of real embeddings.
  int degree() const { return is_rational() ? 1 : 2; }

  friend bool operator==(const QuadField&, const QuadField&) = default;

 private:
  std::int64_t d_;
};

bool is_squarefree(std::int64_t n);

/// Exact element a + b sqrt(d).  For the rational field b is always 0.
class QuadElem {
 public:
  explicit QuadElem(QuadField field, Rational a = 0, Rational b = 0);
  static QuadElem sqrt_d(QuadField field) { return QuadElem(field, 0, 1); }

  const QuadField& field() const { return field_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QuadElem operator-() const;
  QuadElem& operator+=(const QuadElem& rhs);
  QuadElem& operator-=(const QuadElem& rhs);
  QuadElem& operator*=(const QuadElem& rhs);
  QuadElem& operator/=(const QuadElem& rhs);

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend QuadElem operator*(QuadElem x, const Rational& q);
  friend QuadElem operator*(const Rational& q, QuadElem x) { return x * q; }
  friend QuadElem operator+(QuadElem x, const Rational& q);
  friend QuadElem operator-(QuadElem x, const Rational& q);

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  QuadField field_;
  Rational a_;
  Rational b_;
};

/// Kind of arithmetic for quad_arith.
enum class ArithOp { add, sub, mul, div };
QuadElem quad_arith(const QuadElem& x, const QuadElem& y, ArithOp op);

QuadElem galois_conj(const QuadElem& x);
Rational norm(const QuadElem& x);
Rational trace(const QuadElem& x);
QuadElem pow(const QuadElem& x, int n);
QuadElem inverse(const QuadElem& x);

/// Membership in the maximal order: trace and norm are rational integers.
bool is_integral(const QuadElem& x);

/// Exact sign of the image under real embedding `which` (0 = identity with
/// sqrt(d) > 0, 1 = the Galois conjugate).
int sign(const QuadElem& x, int which);
/// Double approximation of the image under an embedding.
double to_double(const QuadElem& x, int which = 0);

/// Exact square root in the field, chosen positive under embedding 0.
std::optional<QuadElem> sqrt_in_field(const QuadElem& x);

/// Sum of absolute values of the coordinates; used to prefer simpler
/// representatives of a square class.
Rational height(const QuadElem& x);

/// Fundamental unit > 1 of the maximal order of Q(sqrt d), 2 <= d <= 1000.
QuadElem fundamental_unit(const QuadField& field);

/// Canonical text "a + b * sqrt(d)" (rational parts as p/q).
std::string to_string(const QuadElem& x);
/// Parses the canonical form; also accepts "sqrt(d)", "-b*sqrt(d)", "a".
QuadElem parse_quad(std::string_view text, const QuadField& field);

}  // namespace semiarith::field

#pragma once

#include "semiarith/field/quad_field.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace semiarith::field {

/// Exact element u + v sqrt(s) with u, v, s in a quadratic field K and s
/// totally positive.  Real embeddings are indexed 0..3: bit 0 selects the
/// Galois conjugate of K, bit 1 the negative square root of s.  Over K = Q
/// there are two embeddings and index 1 is the negative root.
class TowerElem {
 public:
  /// Embeds an element of the base field (v = 0, s = 1).
  explicit TowerElem(const QuadElem& base_value);
  TowerElem(QuadElem u, QuadElem v, QuadElem s);

  /// v sqrt(s)
  static TowerElem radical(const QuadElem& s, const QuadElem& v);

  const QuadField& base() const { return u_.field(); }
  const QuadElem& u() const { return u_; }
  const QuadElem& v() const { return v_; }
  const QuadElem& s() const { return s_; }

  bool in_base() const { return v_.is_zero(); }
  int embedding_count() const { return 2 * base().degree(); }

  TowerElem operator-() const;
  TowerElem& operator+=(const TowerElem& rhs);
  TowerElem& operator-=(const TowerElem& rhs);
  TowerElem& operator*=(const TowerElem& rhs);
  TowerElem& operator/=(const TowerElem& rhs);
  friend TowerElem operator+(TowerElem x, const TowerElem& y) { return x += y; }
  friend TowerElem operator-(TowerElem x, const TowerElem& y) { return x -= y; }
  friend TowerElem operator*(TowerElem x, const TowerElem& y) { return x *= y; }
  friend TowerElem operator/(TowerElem x, const TowerElem& y) { return x /= y; }

  /// Exact equality of values (same radicand or both in the base field).
  friend bool operator==(const TowerElem& x, const TowerElem& y);

 private:
  QuadElem u_;
  QuadElem v_;
  QuadElem s_;
};

/// Embedding of the base field underlying tower embedding `which`.
inline int base_embedding(int which, const QuadField& base) {
  return base.degree() == 2 ? (which & 1) : 0;
}
/// Whether tower embedding `which` takes the negative square root.
inline bool negative_root(int which, const QuadField& base) {
  return base.degree() == 2 ? (which & 2) != 0 : (which & 1) != 0;
}

/// Relative norm u^2 - v^2 s down to K.
QuadElem relative_norm(const TowerElem& x);
TowerElem inverse(const TowerElem& x);
/// The value in K if x lies there (v == 0 or s a square in K).
std::optional<QuadElem> as_base(const TowerElem& x);

/// Exact sign under embedding `which` (0..3).
int sign(const TowerElem& x, int which);
double to_double(const TowerElem& x, int which = 0);

std::string to_string(const TowerElem& x);

/// Reads a base-field element, "sqrt(s)", "(v) * sqrt(s)" or
/// "(u) + (v) * sqrt(s)" with u, v, s written as in parse_quad.
TowerElem parse_tower(std::string_view text, const QuadField& field);

}  // namespace semiarith::field

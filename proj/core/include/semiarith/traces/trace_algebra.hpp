#pragma once

#include "semiarith/field/polynomial.hpp"
#include "semiarith/field/quad_field.hpp"
#include "semiarith/field/tower.hpp"

#include <vector>

namespace semiarith::traces {

using field::QuadElem;
using field::QuadField;
using field::TowerElem;

/// Multiquadratic extension L = K(sqrt b_1, ..., sqrt b_k) of a quadratic
/// field, k <= 3, with the b_i totally positive and independent modulo
/// squares.  Elements are coordinate vectors on the monomials
/// t_S = prod_{i in S} sqrt b_i, indexed by the bitmask S.
class TraceAlgebra {
 public:
  class Elem {
   public:
    const std::vector<QuadElem>& coords() const { return c_; }
    bool in_base() const;
    /// The K-coordinate; only meaningful when in_base().
    const QuadElem& base_value() const { return c_.front(); }

   private:
    friend class TraceAlgebra;
    std::vector<QuadElem> c_;
  };

  /// Builds the smallest algebra containing every radicand of `elements`.
  /// Throws UnsupportedTower if more than three independent radicands occur,
  /// FieldMismatch if the base fields differ.
  TraceAlgebra(const QuadField& base, const std::vector<TowerElem>& elements);

  const QuadField& base() const { return base_; }
  const std::vector<QuadElem>& radicands() const { return radicands_; }
  int dimension() const { return 1 << radicands_.size(); }
  int embedding_count() const { return base_.degree() * dimension(); }

  Elem embed(const TowerElem& x) const;
  Elem embed(const QuadElem& x) const;
  Elem constant(const field::Rational& q) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem scale(const Elem& x, const QuadElem& k) const;
  bool equal(const Elem& x, const Elem& y) const;

  /// Characteristic polynomial over Q of multiplication by x (degree
  /// [L:Q]); a power of the minimal polynomial.
  field::RatPoly char_poly(const Elem& x) const;
  bool is_algebraic_integer(const Elem& x) const;

  /// Real embedding: low bit picks the base conjugate (quadratic base),
  /// remaining bits flip the sign of sqrt b_i.
  double to_double(const Elem& x, int which) const;

 private:
  Elem zero() const;

  QuadField base_;
  std::vector<QuadElem> radicands_;
  /// sqrt of each registered tower radicand, as an algebra element.
  std::vector<std::pair<QuadElem, Elem>> roots_;
};

}  // namespace semiarith::traces

#include "semiarith/traces/trace_algebra.hpp"

#include "semiarith/errors.hpp"

#include <cmath>

namespace semiarith::traces {

using field::Rational;
using field::RatPoly;

bool TraceAlgebra::Elem::in_base() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

TraceAlgebra::TraceAlgebra(const QuadField& base, const std::vector<TowerElem>& elements) : base_(base) {
  std::vector<QuadElem> pending;
  for (const TowerElem& x : elements) {
    if (!(x.base() == base_)) throw FieldMismatch();
    if (!x.in_base()) pending.push_back(x.s());
  }
  // Pick an independent set of radicands modulo squares.
  for (const QuadElem& s : pending) {
    bool dependent = false;
    for (unsigned mask = 0; mask < (1U << radicands_.size()) && !dependent; ++mask) {
      QuadElem prod = s;
      for (std::size_t i = 0; i < radicands_.size(); ++i)
        if (mask & (1U << i)) prod *= radicands_[i];
      dependent = field::sqrt_in_field(prod).has_value();
    }
    if (!dependent) {
      if (radicands_.size() == 3) throw UnsupportedTower("more than three independent square roots in the traces");
      radicands_.push_back(s);
    }
  }
  // Express each radicand's root on the monomial basis:
  // sqrt s = r / prod b_i * t_S where r = sqrt(s prod b_i) > 0 at embedding 0.
  for (const QuadElem& s : pending) {
    for (unsigned mask = 0; mask < (1U << radicands_.size()); ++mask) {
      QuadElem prod = s, denom(base_, 1);
      for (std::size_t i = 0; i < radicands_.size(); ++i) {
        if (mask & (1U << i)) {
          prod *= radicands_[i];
          denom *= radicands_[i];
        }
      }
      if (auto r = field::sqrt_in_field(prod)) {
        Elem e = zero();
        e.c_[mask] = *r / denom;
        roots_.emplace_back(s, std::move(e));
        break;
      }
    }
  }
}

TraceAlgebra::Elem TraceAlgebra::zero() const {
  Elem e;
  e.c_.assign(static_cast<std::size_t>(dimension()), QuadElem(base_));
  return e;
}

TraceAlgebra::Elem TraceAlgebra::embed(const QuadElem& x) const {
  if (!(x.field() == base_)) throw FieldMismatch();
  Elem e = zero();
  e.c_[0] = x;
  return e;
}

TraceAlgebra::Elem TraceAlgebra::constant(const Rational& q) const { return embed(QuadElem(base_, q)); }

TraceAlgebra::Elem TraceAlgebra::embed(const TowerElem& x) const {
  if (!(x.base() == base_)) throw FieldMismatch();
  Elem e = embed(x.u());
  if (x.in_base()) return e;
  for (const auto& [s, root] : roots_) {
    if (s == x.s()) return add(e, scale(root, x.v()));
  }
  throw UnsupportedTower("radicand " + field::to_string(x.s()) + " was not registered with the algebra");
}

TraceAlgebra::Elem TraceAlgebra::add(const Elem& x, const Elem& y) const {
  Elem e = x;
  for (std::size_t i = 0; i < e.c_.size(); ++i) e.c_[i] += y.c_[i];
  return e;
}

TraceAlgebra::Elem TraceAlgebra::sub(const Elem& x, const Elem& y) const {
  Elem e = x;
  for (std::size_t i = 0; i < e.c_.size(); ++i) e.c_[i] -= y.c_[i];
  return e;
}

TraceAlgebra::Elem TraceAlgebra::scale(const Elem& x, const QuadElem& k) const {
  Elem e = x;
  for (QuadElem& c : e.c_) c *= k;
  return e;
}

TraceAlgebra::Elem TraceAlgebra::mul(const Elem& x, const Elem& y) const {
  Elem e = zero();
  const unsigned n = static_cast<unsigned>(dimension());
  for (unsigned s = 0; s < n; ++s) {
    if (x.c_[s].is_zero()) continue;
    for (unsigned t = 0; t < n; ++t) {
      if (y.c_[t].is_zero()) continue;
      QuadElem term = x.c_[s] * y.c_[t];
      const unsigned both = s & t;
      for (std::size_t i = 0; i < radicands_.size(); ++i)
        if (both & (1U << i)) term *= radicands_[i];
      e.c_[s ^ t] += term;
    }
  }
  return e;
}

bool TraceAlgebra::equal(const Elem& x, const Elem& y) const { return x.c_ == y.c_; }

RatPoly TraceAlgebra::char_poly(const Elem& x) const {
  // Faddeev-LeVerrier on the matrix of multiplication by x over K.
  const std::size_t n = static_cast<std::size_t>(dimension());
  using Matrix = std::vector<std::vector<QuadElem>>;
  Matrix m(n, std::vector<QuadElem>(n, QuadElem(base_)));
  for (std::size_t col = 0; col < n; ++col) {
    Elem basis = zero();
    basis.c_[col] = QuadElem(base_, 1);
    const Elem img = mul(x, basis);
    for (std::size_t row = 0; row < n; ++row) m[row][col] = img.c_[row];
  }
  std::vector<QuadElem> coeff(n + 1, QuadElem(base_));  // coeff[k] multiplies X^k
  coeff[n] = QuadElem(base_, 1);
  Matrix mk(n, std::vector<QuadElem>(n, QuadElem(base_)));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Matrix next(n, std::vector<QuadElem>(n, QuadElem(base_)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        QuadElem acc(base_);
        for (std::size_t l = 0; l < n; ++l) acc += m[i][l] * mk[l][j];
        next[i][j] = acc;
      }
      next[i][i] += coeff[n - k + 1];
    }
    mk = std::move(next);
    QuadElem tr(base_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += m[i][l] * mk[l][i];
    coeff[n - k] = tr * Rational(-1, static_cast<long>(k));
  }
  // Multiply by the Galois conjugate polynomial to descend to Q.
  std::vector<QuadElem> full = coeff;
  if (base_.degree() == 2) {
    full.assign(2 * n + 1, QuadElem(base_));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) full[i + j] += coeff[i] * field::galois_conj(coeff[j]);
  }
  std::vector<Rational> rat;
  for (const QuadElem& c : full) {
    if (!c.is_rational()) throw VerificationFailure("characteristic polynomial is not rational");
    rat.push_back(c.a());
  }
  return RatPoly(rat);
}

bool TraceAlgebra::is_algebraic_integer(const Elem& x) const { return field::has_integer_coefficients(char_poly(x)); }

double TraceAlgebra::to_double(const Elem& x, int which) const {
  const int base_idx = base_.degree() == 2 ? (which & 1) : 0;
  const int signs = base_.degree() == 2 ? (which >> 1) : which;
  double total = 0.0;
  for (std::size_t s = 0; s < x.c_.size(); ++s) {
    double term = field::to_double(x.c_[s], base_idx);
    for (std::size_t i = 0; i < radicands_.size(); ++i) {
      if (s & (1U << i)) {
        const double r = std::sqrt(field::to_double(radicands_[i], base_idx));
        term *= (signs & (1 << i)) ? -r : r;
      }
    }
    total += term;
  }
  return total;
}

}  // namespace semiarith::traces

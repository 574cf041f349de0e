#include "semiarith/field/enclosure.hpp"

#include "semiarith/errors.hpp"

#include <algorithm>

namespace semiarith::field {

double RealEnclosure::midpoint() const {
  const Rational m = (lo + hi) / 2;
  return m.get_d();
}

int RealEnclosure::certain_sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return 0;
}

RealEnclosure intersect(const RealEnclosure& x, const RealEnclosure& y) {
  RealEnclosure out{std::max(x.lo, y.lo), std::min(x.hi, y.hi)};
  if (out.lo > out.hi) throw VerificationFailure("disjoint enclosures of the same number");
  return out;
}

namespace {

RealEnclosure add(const RealEnclosure& x, const RealEnclosure& y) { return {x.lo + y.lo, x.hi + y.hi}; }

RealEnclosure mul(const RealEnclosure& x, const RealEnclosure& y) {
  const Rational p[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RealEnclosure point(const Rational& q) { return {q, q}; }

RealEnclosure round_out(const RealEnclosure& x, unsigned bits) {
  if (x.lo == x.hi) return x;
  return {dyadic_floor(x.lo, bits), dyadic_ceil(x.hi, bits)};
}

RealEnclosure enclose(const QuadElem& x, int which, unsigned bits) {
  if (x.is_rational()) return point(x.a());
  const Rational d(x.field().d());
  RealEnclosure root{sqrt_lower(d, bits), sqrt_upper(d, bits)};
  if (which & 1) root = {-root.hi, -root.lo};
  return add(point(x.a()), mul(point(x.b()), root));
}

RealEnclosure enclose(const TowerElem& x, int which, unsigned bits) {
  const int g = base_embedding(which, x.base());
  if (x.in_base()) return enclose(x.u(), g, bits);
  RealEnclosure s = enclose(x.s(), g, bits);
  RealEnclosure root{sqrt_lower(std::max(s.lo, Rational(0)), bits), sqrt_upper(s.hi, bits)};
  if (negative_root(which, x.base())) root = {-root.hi, -root.lo};
  return add(enclose(x.u(), g, bits), mul(enclose(x.v(), g, bits), root));
}

void check_index(int which, int count) {
  if (which < 0 || which >= count) throw InvalidArgument("embedding index out of range");
}

template <class Elem>
RealEnclosure embed_to_tolerance(const Elem& x, int which, double tol) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const Rational t(tol);
  for (unsigned bits = 32; bits <= (1U << 20); bits *= 2) {
    RealEnclosure e = embed_real_bits(x, which, bits);
    if (e.width() < t) return e;
  }
  throw VerificationFailure("enclosure did not reach the requested width");
}

}  // namespace

RealEnclosure embed_real_bits(const QuadElem& x, int which, unsigned bits) {
  check_index(which, x.field().degree());
  return round_out(enclose(x, which, bits + 4), bits);
}

RealEnclosure embed_real_bits(const TowerElem& x, int which, unsigned bits) {
  check_index(which, x.embedding_count());
  return round_out(enclose(x, which, bits + 4), bits);
}

RealEnclosure embed_real(const QuadElem& x, int which, double tol) {
  return embed_to_tolerance(x, which, tol);
}

RealEnclosure embed_real(const TowerElem& x, int which, double tol) {
  return embed_to_tolerance(x, which, tol);
}

RealEnclosure refine(const TowerElem& x, int which, const RealEnclosure& prev) {
  const Rational target = prev.width() / 2;
  for (unsigned bits = 8; bits <= (1U << 20); bits += 8) {
    RealEnclosure e = intersect(prev, embed_real_bits(x, which, bits));
    if (e.width() <= target) return e;
  }
  throw VerificationFailure("refinement stalled");
}

}  // namespace semiarith::field

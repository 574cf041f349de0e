#include "semiarith/traces/invariants.hpp"

#include "semiarith/errors.hpp"
#include "semiarith/field/min_poly.hpp"
#include "semiarith/traces/trace_algebra.hpp"
#include "semiarith/traces/word_traces.hpp"

namespace semiarith::traces {

using field::Integer;
using field::Rational;

namespace {

std::optional<QuadElem> base_part(const TraceAlgebra::Elem& x) {
  if (!x.in_base()) return std::nullopt;
  return x.base_value();
}

QuadElem require(const std::optional<QuadElem>& x, const char* what) {
  if (!x) throw UnsupportedTower(std::string(what) + " does not lie in the base field");
  return *x;
}

// Largest s with s^2 | n, from primes below the trial bound and a final
// perfect-square test on the cofactor.
Integer square_factor(Integer n) {
  n = abs(n);
  Integer s = 1;
  if (n == 0) return s;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      s *= p;
    }
    while (n % p == 0) n /= p;
  }
  if (n > 1 && field::is_perfect_square(n)) s *= field::isqrt_floor(n);
  return s;
}

// Scales x by a rational square so that it becomes integral; a rational
// entry is further reduced to its squarefree part (up to the trial bound).
QuadElem reduce_content(const QuadElem& x) {
  QuadElem y = x;
  if (!field::is_integral(y)) {
    const Integer den = lcm(x.a().get_den(), x.b().get_den());
    y = y * Rational(den * den);
  }
  if (!y.is_rational()) return y;
  const Integer s = square_factor(y.a().get_num());
  return s == 1 ? y : y * Rational(1, s * s);
}

bool better(const QuadElem& cand, const QuadElem& cur) {
  const Rational hc = field::height(cand), hx = field::height(cur);
  if (hc != hx) return hc < hx;
  return field::sign(cand * cand - cur * cur, 0) > 0;
}

QuadElem reduce_entry(const QuadElem& x, const std::vector<QuadElem>& hints) {
  QuadElem cur = reduce_content(x);
  for (bool improved = true; improved;) {
    improved = false;
    for (const QuadElem& h : hints) {
      const QuadElem h2 = h * h;
      for (const QuadElem& cand : {cur / h2, cur * h2}) {
        if (field::is_integral(cand) && better(cand, cur)) {
          cur = reduce_content(cand);
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
  }
  return cur;
}

TowerElem conj(const TowerElem& x) {
  if (x.in_base()) return TowerElem(field::galois_conj(x.u()));
  return TowerElem(field::galois_conj(x.u()), field::galois_conj(x.v()), field::galois_conj(x.s()));
}

}  // namespace

TraceData::TraceData(TowerElem tr_a, TowerElem tr_b, TowerElem tr_ab, QuadElem tr_comm)
    : tr_a_(std::move(tr_a)),
      tr_b_(std::move(tr_b)),
      tr_ab_(std::move(tr_ab)),
      tr_comm_(std::move(tr_comm)),
      a_sq_(tr_comm_.field()),
      b_sq_(tr_comm_.field()),
      triple_(tr_comm_.field()) {
  const QuadField& k = tr_comm_.field();
  if (!(tr_a_.base() == k) || !(tr_b_.base() == k) || !(tr_ab_.base() == k)) throw FieldMismatch();
  const TraceAlgebra alg(k, {tr_a_, tr_b_, tr_ab_});
  const auto a = alg.embed(tr_a_), b = alg.embed(tr_b_), c = alg.embed(tr_ab_);
  const auto a2 = alg.mul(a, a), b2 = alg.mul(b, b), abc = alg.mul(alg.mul(a, b), c);
  auto fricke = alg.sub(alg.add(alg.add(a2, b2), alg.mul(c, c)), abc);
  fricke = alg.sub(fricke, alg.constant(2));
  if (!alg.equal(fricke, alg.embed(tr_comm_)))
    throw InvalidArgument("trace data violates the Fricke identity for tr[A,B]");
  a_sq_ = require(base_part(a2), "trA^2");
  b_sq_ = require(base_part(b2), "trB^2");
  triple_ = require(base_part(abc), "trA trB trAB");
}

QuadElem TraceData::tr_a_sq() const { return a_sq_; }
QuadElem TraceData::tr_b_sq() const { return b_sq_; }
QuadElem TraceData::triple_product() const { return triple_; }

TraceData galois_conj(const TraceData& t) {
  return TraceData(conj(t.tr_a()), conj(t.tr_b()), conj(t.tr_ab()), field::galois_conj(t.tr_comm()));
}

TraceField invariant_trace_field(const TraceData& t) {
  const std::pair<const char*, QuadElem> gens[3] = {
      {"trA^2", t.tr_a_sq()}, {"trB^2", t.tr_b_sq()}, {"trA trB trAB", t.triple_product()}};
  for (const auto& [name, g] : gens) {
    if (!g.is_rational()) return {t.base(), g, name};
  }
  return {QuadField::rationals(), std::nullopt, ""};
}

HilbertSymbol::HilbertSymbol(QuadElem a_, QuadElem b_) : a(std::move(a_)), b(std::move(b_)) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("Hilbert symbol entries must be nonzero");
}

HilbertSymbol invariant_quaternion_symbol(const TraceData& t) {
  const QuadElem a2 = t.tr_a_sq();
  if (a2 == QuadElem(a2.field(), 4)) throw DegenerateTraces("trA^2 = 4: A is not hyperbolic");
  if (t.tr_comm() == QuadElem(a2.field(), 2)) throw DegenerateTraces("tr[A,B] = 2: the group is reducible");
  return HilbertSymbol(a2 * (a2 - Rational(4)), a2 * t.tr_b_sq() * (t.tr_comm() - Rational(2)));
}

std::vector<QuadElem> trace_hints(const TraceData& t) {
  std::vector<QuadElem> out;
  for (const QuadElem& h : {t.tr_a_sq(), t.tr_b_sq(), t.triple_product(), t.tr_comm() - Rational(2)})
    if (!h.is_zero()) out.push_back(h);
  return out;
}

HilbertSymbol square_class_reduce(const HilbertSymbol& s, const std::vector<QuadElem>& hints) {
  std::vector<QuadElem> all;
  if (!s.field().is_rational()) all.push_back(QuadElem::sqrt_d(s.field()));
  for (const QuadElem& h : hints) {
    if (!(h.field() == s.field())) throw FieldMismatch();
    if (h.is_zero() || h * h == QuadElem(s.field(), 1)) continue;
    all.push_back(h);
  }
  return HilbertSymbol(reduce_entry(s.a, all), reduce_entry(s.b, all));
}

PlaceSplitReport real_place_splitting(const HilbertSymbol& s) {
  PlaceSplitReport r;
  for (int w = 0; w < s.field().degree(); ++w) {
    const int sa = field::sign(s.a, w), sb = field::sign(s.b, w);
    if (sa == 0 || sb == 0) throw VerificationFailure("Hilbert symbol entry vanishes under an embedding");
    const bool split = sa > 0 || sb > 0;
    r.places.push_back(split ? PlaceVerdict::split : PlaceVerdict::ramified);
    if (split) ++r.arithmetic_dimension;
  }
  return r;
}

bool verify_split_witness(const HilbertSymbol& s, const QuadElem& x, const QuadElem& y) {
  if (!(x.field() == s.field()) || !(y.field() == s.field())) throw FieldMismatch();
  return s.a * x * x + s.b * y * y == QuadElem(s.field(), 1);
}

GlobalSplit global_splitting(const HilbertSymbol& s, const QuadElem& x, const QuadElem& y) {
  return verify_split_witness(s, x, y) ? GlobalSplit::split : GlobalSplit::unknown;
}

SemiArithmeticResult semi_arithmetic_check(const TraceData& t, int word_depth) {
  if (word_depth < 1) throw InvalidArgument("word depth must be at least 1");
  SemiArithmeticResult r;
  // The base field Q(sqrt d), d > 0, is totally real by construction.
  const std::pair<const char*, const TowerElem*> gens[3] = {{"A", &t.tr_a()}, {"B", &t.tr_b()}, {"AB", &t.tr_ab()}};
  for (const auto& [name, x] : gens) {
    ++r.words_checked;
    if (!field::is_algebraic_integer(*x)) {
      r.failing_word = name;
      r.reason = std::string("trace of ") + name + " is not an algebraic integer";
      return r;
    }
  }
  const TraceAlgebra alg(t.base(), {t.tr_a(), t.tr_b(), t.tr_ab()});
  WordTraceEvaluator eval(alg, alg.embed(t.tr_a()), alg.embed(t.tr_b()), alg.embed(t.tr_ab()));
  for (const std::string& w : words_up_to(word_depth)) {
    if (w == "A" || w == "B" || w == "AB") continue;
    ++r.words_checked;
    if (!alg.is_algebraic_integer(eval.trace(w))) {
      r.failing_word = w;
      r.reason = "trace of " + w + " is not an algebraic integer";
      return r;
    }
  }
  r.passed = true;
  return r;
}

std::string to_string(PlaceVerdict v) { return v == PlaceVerdict::split ? "split" : "ramified"; }

std::string to_string(const HilbertSymbol& s) {
  return "(" + field::to_string(s.a) + ", " + field::to_string(s.b) + ")";
}

}  // namespace semiarith::traces

#include "doctest.h"

#include "semiarith/errors.hpp"
#include "semiarith/traces/trace_algebra.hpp"
#include "semiarith/traces/word_traces.hpp"

#include <array>
#include <random>
#include <set>

using namespace semiarith;
using namespace semiarith::field;
using namespace semiarith::traces;

namespace {

using Mat = std::array<long long, 4>;

Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

Mat inv(const Mat& x) { return {x[3], -x[1], -x[2], x[0]}; }

Mat random_sl2z(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  const Mat gens[4] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}};
  Mat m{1, 0, 0, 1};
  for (int i = 0; i < 4; ++i) m = mul(m, gens[pick(rng)]);
  return m;
}

long long word_trace(const std::string& w, const Mat& a, const Mat& b) {
  Mat m{1, 0, 0, 1};
  for (char c : w) {
    switch (c) {
      case 'A': m = mul(m, a); break;
      case 'a': m = mul(m, inv(a)); break;
      case 'B': m = mul(m, b); break;
      default: m = mul(m, inv(b)); break;
    }
  }
  return m[0] + m[3];
}

}  // namespace

TEST_CASE("word reduction") {
  CHECK(free_reduce("AaBAbB") == "BA");
  CHECK(cyclic_reduce("bABAB") == "AB" + std::string("A"));
  CHECK(cyclic_reduce("aBA") == "B");
  CHECK(inverse_word("AAb") == "Baa");
  CHECK(canonical_word("BA") == "AB");
  CHECK(canonical_word("ba") == "AB");
  CHECK(canonical_word("bABa") == "ABab");
  CHECK_THROWS_AS(free_reduce("AC"), InvalidArgument);
}

TEST_CASE("word enumeration") {
  CHECK(words_up_to(1) == std::vector<std::string>{"A", "B", "AB"});
  const auto w2 = words_up_to(2);
  CHECK(w2 == std::vector<std::string>{"A", "B", "AA", "AB", "Ab", "BB"});
  const auto w4 = words_up_to(4);
  std::set<std::string> uniq(w4.begin(), w4.end());
  CHECK(uniq.size() == w4.size());
  for (const auto& w : w4) CHECK(canonical_word(w) == w);
  CHECK_THROWS_AS(words_up_to(0), InvalidArgument);
}

TEST_CASE("trace recursion matches integer matrices") {
  std::mt19937 rng(21);
  const QuadField Q = QuadField::rationals();
  for (int t = 0; t < 30; ++t) {
    const Mat a = random_sl2z(rng), b = random_sl2z(rng);
    auto elem = [&](long long v) { return TowerElem(QuadElem(Q, static_cast<long>(v))); };
    const TraceAlgebra alg(Q, {});
    WordTraceEvaluator eval(alg, alg.embed(elem(a[0] + a[3])), alg.embed(elem(b[0] + b[3])),
                            alg.embed(elem(word_trace("AB", a, b))));
    for (const std::string& w : words_up_to(6)) {
      const auto got = eval.trace(w);
      REQUIRE(got.in_base());
      CHECK(got.base_value().a() == Rational(static_cast<long>(word_trace(w, a, b))));
    }
    CHECK(eval.trace("").base_value().a() == 2);
    CHECK(eval.trace("AAbaBB").base_value().a() == Rational(static_cast<long>(word_trace("AAbaBB", a, b))));
  }
}

TEST_CASE("multiquadratic algebra") {
  const QuadField Q = QuadField::rationals();
  const TowerElem r2 = TowerElem::radical(QuadElem(Q, 2), QuadElem(Q, 1));
  const TowerElem r3 = TowerElem::radical(QuadElem(Q, 3), QuadElem(Q, 1));
  const TowerElem r6 = TowerElem::radical(QuadElem(Q, 6), QuadElem(Q, 1));
  const TraceAlgebra alg(Q, {r2, r3, r6});
  CHECK(alg.dimension() == 4);
  const auto x = alg.add(alg.embed(r2), alg.embed(r3));
  CHECK(alg.char_poly(x) == IntPolynomial::from_descending({1, 0, -10, 0, 1}).to_rational());
  CHECK(alg.equal(alg.mul(alg.embed(r2), alg.embed(r3)), alg.embed(r6)));
  CHECK(alg.to_double(x, 0) == doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0)));
  CHECK(alg.to_double(x, 1) == doctest::Approx(-std::sqrt(2.0) + std::sqrt(3.0)));
  const auto half = alg.scale(x, QuadElem(Q, Rational(1, 2)));
  CHECK_FALSE(alg.is_algebraic_integer(half));
  CHECK(alg.is_algebraic_integer(x));
  const TowerElem r5 = TowerElem::radical(QuadElem(Q, 5), QuadElem(Q, 1));
  const TowerElem r7 = TowerElem::radical(QuadElem(Q, 7), QuadElem(Q, 1));
  CHECK_THROWS_AS(TraceAlgebra(Q, {r2, r3, r5, r7}), UnsupportedTower);
}

TEST_CASE("algebra over a quadratic base") {
  const QuadField K(3);
  const QuadElem eps(K, 2, 1);
  const TowerElem x = TowerElem::radical(QuadElem(K, 4) + eps * eps, QuadElem(K, 1));
  const TraceAlgebra alg(K, {x});
  CHECK(alg.dimension() == 2);
  CHECK(alg.embedding_count() == 4);
  CHECK(alg.char_poly(alg.embed(x)) == IntPolynomial::from_descending({1, 0, -22, 0, 73}).to_rational());
}

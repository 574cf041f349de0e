#include "semiarith/field/quad_field.hpp"

#include "semiarith/errors.hpp"

#include <cctype>
#include <cmath>
#include <regex>

namespace semiarith::field {

bool is_squarefree(std::int64_t n) {
  if (n <= 0) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

QuadField::QuadField(std::int64_t d) : d_(d) {
  if (d != 1 && (d < 2 || !is_squarefree(d)))
    throw InvalidArgument("radicand must be a squarefree integer >= 2");
}

QuadElem::QuadElem(QuadField field, Rational a, Rational b)
    : field_(field), a_(std::move(a)), b_(std::move(b)) {
  if (field_.is_rational()) {
    a_ += b_;
    b_ = 0;
  }
}

namespace {

void require_same_field(const QuadElem& x, const QuadElem& y) {
  if (!(x.field() == y.field())) throw FieldMismatch();
}

}  // namespace

QuadElem QuadElem::operator-() const { return QuadElem(field_, -a_, -b_); }

QuadElem& QuadElem::operator+=(const QuadElem& rhs) {
  require_same_field(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& rhs) {
  require_same_field(*this, rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& rhs) {
  require_same_field(*this, rhs);
  const Rational d = field_.d();
  Rational a = a_ * rhs.a_ + d * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  if (field_.is_rational()) b = 0;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& rhs) {
  require_same_field(*this, rhs);
  return *this *= inverse(rhs);
}

QuadElem operator*(QuadElem x, const Rational& q) {
  return QuadElem(x.field_, x.a_ * q, x.b_ * q);
}

QuadElem operator+(QuadElem x, const Rational& q) {
  return QuadElem(x.field_, x.a_ + q, x.b_);
}

QuadElem operator-(QuadElem x, const Rational& q) {
  return QuadElem(x.field_, x.a_ - q, x.b_);
}

QuadElem quad_arith(const QuadElem& x, const QuadElem& y, ArithOp op) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

QuadElem galois_conj(const QuadElem& x) {
  return QuadElem(x.field(), x.a(), -x.b());
}

Rational norm(const QuadElem& x) {
  return x.a() * x.a() - Rational(x.field().d()) * x.b() * x.b();
}

Rational trace(const QuadElem& x) { return 2 * x.a(); }

QuadElem inverse(const QuadElem& x) {
  const Rational n = norm(x);
  if (n == 0) throw DivisionByZero();
  return QuadElem(x.field(), x.a() / n, -x.b() / n);
}

QuadElem pow(const QuadElem& x, int n) {
  QuadElem base = n < 0 ? inverse(x) : x;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  QuadElem out(x.field(), 1);
  while (e) {
    if (e & 1U) out *= base;
    base *= base;
    e >>= 1U;
  }
  return out;
}

bool is_integral(const QuadElem& x) {
  return is_integer(trace(x)) && is_integer(norm(x));
}

int sign(const QuadElem& x, int which) {
  const int sa = sgn(x.a());
  const int sb = (which == 0 ? 1 : -1) * sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b sqrt(d) have opposite signs: compare a^2 with d b^2.
  const int cmp_ = cmp(x.a() * x.a(), Rational(x.field().d()) * x.b() * x.b());
  if (cmp_ == 0) return 0;
  return cmp_ > 0 ? sa : sb;
}

double to_double(const QuadElem& x, int which) {
  const double root = std::sqrt(static_cast<double>(x.field().d()));
  const double b = x.b().get_d();
  return x.a().get_d() + (which == 0 ? b : -b) * (x.field().is_rational() ? 0.0 : root);
}

std::optional<QuadElem> sqrt_in_field(const QuadElem& x) {
  const QuadField f = x.field();
  const Rational d = f.d();
  Rational r;
  if (x.is_rational()) {
    if (rational_sqrt(x.a(), r)) return QuadElem(f, r);
    if (!f.is_rational() && rational_sqrt(x.a() / d, r))
      return QuadElem(f, 0, r);
    return std::nullopt;
  }
  // (p + q sqrt d)^2 = p^2 + d q^2 + 2pq sqrt d
  Rational n;
  if (!rational_sqrt(norm(x), n)) return std::nullopt;
  for (const Rational& cand : {Rational((x.a() + n) / 2), Rational((x.a() - n) / 2)}) {
    Rational p;
    if (cand == 0 || !rational_sqrt(cand, p)) continue;
    Rational q = x.b() / (2 * p);
    QuadElem root(f, p, q);
    if (root * root == x) {
      if (sign(root, 0) < 0) root = -root;
      return root;
    }
  }
  return std::nullopt;
}

Rational height(const QuadElem& x) { return abs(x.a()) + abs(x.b()); }

namespace {

// x^2 - d y^2 == target with the smallest y >= 1 (small d only).
std::optional<QuadElem> unit_brute_force(const QuadField& f, bool half) {
  const Integer d = f.d();
  const int bound = half ? 4 : 1;
  for (Integer y = 1; y < 100000; ++y) {
    for (int t : {-bound, bound}) {
      Integer x2 = d * y * y + t;
      if (x2 > 0 && is_perfect_square(x2)) {
        Integer x = isqrt_floor(x2);
        Rational scale = half ? Rational(1, 2) : Rational(1);
        return QuadElem(f, Rational(x) * scale, Rational(y) * scale);
      }
    }
  }
  return std::nullopt;
}

// Continued-fraction expansion of sqrt(d); the first convergent p/q with
// p^2 - d q^2 in {+-1} (or {+-4} over the half-integral order) is the unit.
QuadElem unit_continued_fraction(const QuadField& f, bool half) {
  const Integer d = f.d();
  const Integer a0 = isqrt_floor(d);
  Integer m = 0, q = 1, a = a0;
  Integer p_prev = 1, p = a0;
  Integer q_prev = 0, qq = 1;
  for (int iter = 0; iter < 100000; ++iter) {
    const Integer nrm = p * p - d * qq * qq;
    if (abs(nrm) == 1) return QuadElem(f, Rational(p), Rational(qq));
    if (half && abs(nrm) == 4)
      return QuadElem(f, Rational(p, 2), Rational(qq, 2));
    m = a * q - m;
    q = (d - m * m) / q;
    a = (a0 + m) / q;
    Integer p_next = a * p + p_prev;
    Integer q_next = a * qq + q_prev;
    p_prev = p;
    p = p_next;
    q_prev = qq;
    qq = q_next;
  }
  throw VerificationFailure("continued fraction did not reach a unit");
}

}  // namespace

QuadElem fundamental_unit(const QuadField& field) {
  if (field.is_rational() || field.d() > 1000)
    throw InvalidArgument("fundamental_unit supports squarefree 2 <= d <= 1000");
  const bool half = field.d() % 4 == 1;
  QuadElem eps = [&] {
    if (field.d() <= 20) {
      if (auto u = unit_brute_force(field, half)) return *u;
    }
    return unit_continued_fraction(field, half);
  }();
  if (abs(norm(eps)) != 1 || !is_integral(eps) || sign(eps - Rational(1), 0) <= 0)
    throw VerificationFailure("fundamental unit failed verification");
  return eps;
}

std::string to_string(const QuadElem& x) {
  if (x.b() == 0) return to_string(x.a());
  const std::string root = "sqrt(" + std::to_string(x.field().d()) + ")";
  const std::string coeff = abs(x.b()) == 1 ? root : to_string(Rational(abs(x.b()))) + " * " + root;
  if (x.a() == 0) return (x.b() < 0 ? "-" : "") + coeff;
  return to_string(x.a()) + (x.b() < 0 ? " - " : " + ") + coeff;
}

QuadElem parse_quad(std::string_view text, const QuadField& field) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidArgument("empty field element");

  // Split into signed terms at top-level '+' / '-' (not inside sqrt(...)).
  Rational a = 0, b = 0;
  std::size_t i = 0;
  static const std::regex radical_term(R"(^(?:([0-9]+(?:/[0-9]+)?)\*)?sqrt\(([0-9]+)\)$)");
  while (i < s.size()) {
    int sgn_ = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sgn_ = -sgn_;
      ++i;
    }
    std::size_t j = i;
    int depth = 0;
    while (j < s.size()) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      if (depth == 0 && (s[j] == '+' || s[j] == '-')) break;
      ++j;
    }
    const std::string term = s.substr(i, j - i);
    if (term.empty()) throw InvalidArgument("malformed field element: '" + std::string(text) + "'");
    std::smatch m;
    if (std::regex_match(term, m, radical_term)) {
      const long long dd = std::stoll(m[2].str());
      if (dd != field.d())
        throw FieldMismatch("element '" + std::string(text) + "' is not in Q(sqrt " +
                            std::to_string(field.d()) + ")");
      Rational c = m[1].matched ? parse_rational(m[1].str()) : Rational(1);
      b += sgn_ * c;
    } else {
      a += sgn_ * parse_rational(term);
    }
    i = j;
  }
  return QuadElem(field, a, b);
}

}  // namespace semiarith::field

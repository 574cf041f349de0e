#include "semiarith/field/tower.hpp"

#include <cctype>

#include "semiarith/errors.hpp"

#include <cmath>

namespace semiarith::field {

namespace {

void require_totally_positive(const QuadElem& s) {
  for (int w = 0; w < s.field().degree(); ++w)
    if (sign(s, w) <= 0) throw InvalidArgument("tower radicand must be totally positive");
}

void require_compatible(const TowerElem& x, const TowerElem& y) {
  if (!(x.base() == y.base())) throw FieldMismatch();
  if (!x.in_base() && !y.in_base() && !(x.s() == y.s()))
    throw UnsupportedTower("tower elements have different radicands");
}

const QuadElem& common_radicand(const TowerElem& x, const TowerElem& y) {
  return x.in_base() ? y.s() : x.s();
}

}  // namespace

TowerElem::TowerElem(const QuadElem& base_value)
    : u_(base_value), v_(base_value.field()), s_(base_value.field(), 1) {}

TowerElem::TowerElem(QuadElem u, QuadElem v, QuadElem s)
    : u_(std::move(u)), v_(std::move(v)), s_(std::move(s)) {
  if (!(u_.field() == v_.field()) || !(u_.field() == s_.field())) throw FieldMismatch();
  require_totally_positive(s_);
  if (v_.is_zero()) s_ = QuadElem(u_.field(), 1);
}

TowerElem TowerElem::radical(const QuadElem& s, const QuadElem& v) {
  return TowerElem(QuadElem(s.field()), v, s);
}

TowerElem TowerElem::operator-() const { return TowerElem(-u_, -v_, s_); }

TowerElem& TowerElem::operator+=(const TowerElem& rhs) {
  require_compatible(*this, rhs);
  *this = TowerElem(u_ + rhs.u_, v_ + rhs.v_, common_radicand(*this, rhs));
  return *this;
}

TowerElem& TowerElem::operator-=(const TowerElem& rhs) { return *this += -rhs; }

TowerElem& TowerElem::operator*=(const TowerElem& rhs) {
  require_compatible(*this, rhs);
  const QuadElem s = common_radicand(*this, rhs);
  *this = TowerElem(u_ * rhs.u_ + v_ * rhs.v_ * s, u_ * rhs.v_ + v_ * rhs.u_, s);
  return *this;
}

TowerElem& TowerElem::operator/=(const TowerElem& rhs) { return *this *= inverse(rhs); }

bool operator==(const TowerElem& x, const TowerElem& y) {
  if (!(x.base() == y.base())) return false;
  if (x.in_base() || y.in_base() || x.s() == y.s())
    return x.u() == y.u() && x.v() == y.v() && (x.in_base() || x.s() == y.s());
  return false;
}

QuadElem relative_norm(const TowerElem& x) { return x.u() * x.u() - x.v() * x.v() * x.s(); }

TowerElem inverse(const TowerElem& x) {
  const QuadElem n = relative_norm(x);
  if (n.is_zero()) throw DivisionByZero();
  const QuadElem ni = field::inverse(n);
  return TowerElem(x.u() * ni, -x.v() * ni, x.s());
}

std::optional<QuadElem> as_base(const TowerElem& x) {
  if (x.in_base()) return x.u();
  if (auto r = sqrt_in_field(x.s())) return x.u() + x.v() * *r;
  return std::nullopt;
}

int sign(const TowerElem& x, int which) {
  const int g = base_embedding(which, x.base());
  const int su = sign(x.u(), g);
  int sv = sign(x.v(), g);
  if (negative_root(which, x.base())) sv = -sv;
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // u and v sqrt(s) have opposite signs: compare u^2 with v^2 s.
  const int c = sign(x.u() * x.u() - x.v() * x.v() * x.s(), g);
  if (c == 0) return 0;
  return c > 0 ? su : sv;
}

double to_double(const TowerElem& x, int which) {
  const int g = base_embedding(which, x.base());
  const double root = std::sqrt(to_double(x.s(), g));
  const double v = to_double(x.v(), g);
  return to_double(x.u(), g) + (negative_root(which, x.base()) ? -v : v) * root;
}

std::string to_string(const TowerElem& x) {
  if (x.in_base()) return to_string(x.u());
  std::string out;
  if (!x.u().is_zero()) out = "(" + to_string(x.u()) + ") + ";
  out += "(" + to_string(x.v()) + ") * sqrt(" + to_string(x.s()) + ")";
  return out;
}

namespace {

// Index of the parenthesis closing the one at `open`, or npos.
std::size_t matching_paren(const std::string& s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  return std::string::npos;
}

}  // namespace

TowerElem parse_tower(std::string_view text, const QuadField& field) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const std::string bad = "malformed tower element: '" + std::string(text) + "'";
  try {
    return TowerElem(parse_quad(s, field));
  } catch (const InvalidArgument&) {
  } catch (const FieldMismatch&) {
  }
  // The radical is the trailing top-level "sqrt(...)".
  std::size_t start = std::string::npos;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (depth == 0 && s.compare(i, 5, "sqrt(") == 0) start = i;
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
  }
  if (start == std::string::npos || matching_paren(s, start + 4) != s.size() - 1) throw InvalidArgument(bad);
  const QuadElem radicand = parse_quad(s.substr(start + 5, s.size() - start - 6), field);
  const std::string head = s.substr(0, start);
  QuadElem u(field, 0), v(field, 1);
  if (!head.empty()) {
    if (head.size() < 4 || head.compare(head.size() - 2, 2, ")*") != 0 || head[0] != '(') throw InvalidArgument(bad);
    const std::string coeffs = head.substr(0, head.size() - 1);
    const std::size_t first = matching_paren(coeffs, 0);
    if (first == coeffs.size() - 1) {
      v = parse_quad(coeffs.substr(1, first - 1), field);
    } else {
      if (first == std::string::npos || coeffs.compare(first + 1, 2, "+(") != 0 ||
          matching_paren(coeffs, first + 2) != coeffs.size() - 1)
        throw InvalidArgument(bad);
      u = parse_quad(coeffs.substr(1, first - 1), field);
      v = parse_quad(coeffs.substr(first + 3, coeffs.size() - first - 4), field);
    }
  }
  return TowerElem(u, v, radicand);
}

}  // namespace semiarith::field

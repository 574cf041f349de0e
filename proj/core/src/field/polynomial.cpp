#include "semiarith/field/polynomial.hpp"

#include "semiarith/errors.hpp"

#include <algorithm>

namespace semiarith::field {

RatPoly::RatPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& x, const RatPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Rational> out(x.c_.size() + y.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i)
    for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
  return RatPoly(std::move(out));
}

RatPoly operator*(RatPoly x, const Rational& q) {
  for (auto& c : x.c_) c *= q;
  x.trim();
  return x;
}

RatPoly derivative(const RatPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out;
  for (int i = 1; i <= p.degree(); ++i) out.push_back(p[i] * i);
  return RatPoly(std::move(out));
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& d) {
  if (d.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = p.coefficients();
  const int dd = d.degree();
  if (p.degree() < dd) return {RatPoly(), p};
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dd + 1), Rational(0));
  for (int k = p.degree() - dd; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + dd)] / d.leading();
    quot[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * d[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& p, const RatPoly& q) {
  RatPoly a = p, b = q;
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

RatPoly squarefree_radical(const RatPoly& p) {
  if (p.degree() < 1) return make_monic(p);
  return make_monic(divmod(p, gcd(p, derivative(p))).first);
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() < 1) return out;
  const RatPoly f = make_monic(p);
  const RatPoly fp = derivative(f);
  RatPoly a = gcd(f, fp);
  RatPoly b = divmod(f, a).first;
  RatPoly c = divmod(fp, a).first;
  RatPoly dpoly = c - derivative(b);
  for (int i = 1; b.degree() >= 1; ++i) {
    RatPoly g = gcd(b, dpoly);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(dpoly, g).first;
    dpoly = c - derivative(b);
  }
  return out;
}

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : c_(std::move(ascending)) {
  if (c_.size() < 2) throw InvalidArgument("degenerate polynomial (degree 0)");
  if (c_.back() != 1) throw InvalidArgument("polynomial must be monic");
}

IntPolynomial IntPolynomial::from_descending(const std::vector<long long>& coeffs) {
  std::vector<Integer> asc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) asc.emplace_back(static_cast<long>(*it));
  return IntPolynomial(std::move(asc));
}

std::vector<Integer> IntPolynomial::descending() const { return {c_.rbegin(), c_.rend()}; }

RatPoly IntPolynomial::to_rational() const {
  std::vector<Rational> q;
  for (const auto& c : c_) q.emplace_back(c);
  return RatPoly(std::move(q));
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(c_.begin(), c_.end(), c_.rbegin());
}

IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y) {
  std::vector<Integer> out(x.c_.size() + y.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i)
    for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
  return IntPolynomial(std::move(out));
}

bool has_integer_coefficients(const RatPoly& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const Rational& c) { return is_integer(c); });
}

IntPolynomial to_integer_polynomial(const RatPoly& p) {
  if (p.degree() < 1 || p.leading() != 1) throw InvalidArgument("expected a monic polynomial of degree >= 1");
  if (!has_integer_coefficients(p)) throw NonIntegral("polynomial " + to_string(p) + " has non-integral coefficients");
  std::vector<Integer> asc;
  for (const auto& c : p.coefficients()) asc.push_back(c.get_num());
  return IntPolynomial(std::move(asc));
}

namespace {

template <class Coeffs>
std::string render(const Coeffs& c) {
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    using Coeff = typename Coeffs::value_type;
    const Coeff& a = c[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    const std::string mag = Coeff(abs(a)).get_str();
    const bool neg = a < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0 || mag != "1") out += mag;
    if (i >= 1) out += mag != "1" ? "*x" : "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const RatPoly& p) { return render(p.coefficients()); }
std::string to_string(const IntPolynomial& p) { return render(p.coefficients()); }

}  // namespace semiarith::field

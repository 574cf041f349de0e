#include "semiarith/field/rational.hpp"

#include "semiarith/errors.hpp"

#include <cctype>
#include <string>

namespace semiarith::field {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool valid_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!is_perfect_square(q.get_num()) || !is_perfect_square(q.get_den()))
    return false;
  root = make_rational(isqrt_floor(q.get_num()), isqrt_floor(q.get_den()));
  return true;
}

Integer isqrt_floor(const Integer& n) {
  if (n < 0) throw InvalidArgument("square root of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer isqrt_ceil(const Integer& n) {
  Integer r = isqrt_floor(n);
  if (r * r < n) ++r;
  return r;
}

namespace {

Integer pow2(unsigned bits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, bits);
  return p;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q < 0) throw InvalidArgument("square root of a negative rational");
  const Integer scale = pow2(2 * bits);
  Integer n = floor_div(q.get_num() * scale, q.get_den());
  return make_rational(isqrt_floor(n), pow2(bits));
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q < 0) throw InvalidArgument("square root of a negative rational");
  const Integer scale = pow2(2 * bits);
  Integer n = ceil_div(q.get_num() * scale, q.get_den());
  return make_rational(isqrt_ceil(n), pow2(bits));
}

Rational dyadic_floor(const Rational& q, unsigned bits) {
  const Integer p = pow2(bits);
  return make_rational(floor_div(q.get_num() * p, q.get_den()), p);
}

Rational dyadic_ceil(const Rational& q, unsigned bits) {
  const Integer p = pow2(bits);
  return make_rational(ceil_div(q.get_num() * p, q.get_den()), p);
}

Rational dyadic_round(const Rational& q, unsigned bits) {
  const Integer p = pow2(bits);
  // floor(q * 2^bits + 1/2)
  Integer n = floor_div(2 * q.get_num() * p + q.get_den(), 2 * q.get_den());
  return make_rational(n, p);
}

long approx_log2(const Rational& q) {
  return static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) return 0;
  Integer m = abs(n);
  Integer out = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  out *= m;
  return n < 0 ? Integer(-out) : out;
}

}  // namespace semiarith::field

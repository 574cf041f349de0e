#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace semiarith::field {

using Integer = mpz_class;
/// Arbitrary-precision rational; gmp keeps it in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
bool is_perfect_square(const Integer& n);
/// Exact square root if q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

Integer isqrt_floor(const Integer& n);
Integer isqrt_ceil(const Integer& n);

/// floor(sqrt(q) * 2^bits) / 2^bits and the matching ceiling; q >= 0.
Rational sqrt_lower(const Rational& q, unsigned bits);
Rational sqrt_upper(const Rational& q, unsigned bits);

/// Round to the dyadic grid 2^-bits (toward -inf / +inf / nearest).
Rational dyadic_floor(const Rational& q, unsigned bits);
Rational dyadic_ceil(const Rational& q, unsigned bits);
Rational dyadic_round(const Rational& q, unsigned bits);

/// Approximate log2|q| from limb sizes; q != 0.
long approx_log2(const Rational& q);

/// Splits n = s^2 * f with f squarefree (trial division; n is small).
Integer squarefree_part(const Integer& n);

}  // namespace semiarith::field

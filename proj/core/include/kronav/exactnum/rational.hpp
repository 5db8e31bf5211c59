#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace kronav {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form (den nonzero).
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (q nonzero). No decimal points or exponents.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
/// Nearest integer, ties toward +infinity.
Integer round_nearest(const Rational& x);

/// floor(x * 2^k) / 2^k and its ceiling counterpart; k may be negative.
Rational dyadic_floor(const Rational& x, long k);
Rational dyadic_ceil(const Rational& x, long k);

/// Smallest e with |x| < 2^e (x nonzero). Returns a very negative number for zero.
long magnitude_exponent(const Rational& x);

Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Fixed-digit scientific rendering used in reports, e.g. "1.414213562e+00".
std::string to_scientific(const Rational& x, int digits = 10);

}  // namespace kronav

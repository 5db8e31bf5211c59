#include "kronav/exactnum/rational.hpp"

#include <mpfr.h>

#include <cctype>

#include "kronav/error.hpp"

namespace kronav {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    require(is_integer_literal(text), Errc::Validation,
            "malformed rational '" + std::string(text) + "'");
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  require(is_integer_literal(num) && is_integer_literal(den) && den[0] != '-' && den[0] != '+',
          Errc::Validation, "malformed rational '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  require(d != 0, Errc::Validation, "zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, Errc::Validation, "zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer round_nearest(const Rational& x) { return floor(x + Rational(1, 2)); }

Rational dyadic_floor(const Rational& x, long k) {
  Rational scaled = x;
  if (k >= 0) {
    mpq_mul_2exp(scaled.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpq_div_2exp(scaled.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  }
  Rational out(floor(scaled));
  if (k >= 0) {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return out;
}

Rational dyadic_ceil(const Rational& x, long k) { return -dyadic_floor(-x, k); }

long magnitude_exponent(const Rational& x) {
  if (x == 0) return -(1L << 40);
  // |x| < 2^(bits(num) - bits(den) + 1)
  const long num_bits = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  return num_bits - den_bits + 1;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    require(base != 0, Errc::PreconditionViolation, "zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational out;
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  out = Rational(num, den);
  return out;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::string to_scientific(const Rational& x, int digits) {
  mpfr_t v;
  mpfr_init2(v, 128);
  mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDN);
  std::string fmt = "%." + std::to_string(digits - 1) + "Re";
  char buf[256];
  mpfr_snprintf(buf, sizeof(buf), fmt.c_str(), v);
  mpfr_clear(v);
  return buf;
}

}  // namespace kronav

#include "kronav/exactnum/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <utility>

#include "kronav/error.hpp"

namespace kronav {

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(long bits) { mpfr_init2(v_, std::max<long>(bits, MPFR_PREC_MIN)); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Rational to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  Integer mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  Rational out(mant);
  if (e >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return out;
}

// Directed n-th root of a nonnegative rational.
Rational rootn_directed(const Rational& x, unsigned long n, long bits, mpfr_rnd_t rnd) {
  if (x <= 0) return Rational(0);
  MpfrValue v(bits + 8);
  mpfr_set_q(v.get(), x.get_mpq_t(), rnd);
  mpfr_rootn_ui(v.get(), v.get(), n, rnd);
  return to_rational(v.get());
}

// Relative to the endpoint closest to zero, so a positive interval stays positive.
Interval snap_relative(const Interval& x, long bits) {
  Rational mag = x.magnitude();
  if (x.lo() > 0) mag = x.lo();
  if (x.hi() < 0) mag = -x.hi();
  if (mag == 0) return x;
  return x.snapped(bits - magnitude_exponent(mag) + 1);
}

}  // namespace

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  require(lo_ <= hi_, Errc::Internal, "interval with lo > hi");
}

Rational Interval::magnitude() const {
  Rational a = abs(lo_);
  Rational b = abs(hi_);
  return a < b ? b : a;
}

std::optional<int> Interval::certified_sign() const {
  if (lo_ > 0) return 1;
  if (hi_ < 0) return -1;
  return std::nullopt;
}

Interval Interval::snapped(long k) const {
  Interval out;
  out.lo_ = dyadic_floor(lo_, k);
  out.hi_ = dyadic_ceil(hi_, k);
  return out;
}

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Rational new_lo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(new_lo);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  if (lo_ == hi_ && o.lo_ == o.hi_) {
    lo_ *= o.lo_;
    hi_ = lo_;
    return *this;
  }
  Rational a = lo_ * o.lo_;
  Rational b = lo_ * o.hi_;
  Rational c = hi_ * o.lo_;
  Rational d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  require(!o.contains_zero(), Errc::PreconditionViolation, "interval division by a range containing 0");
  Interval inv(Rational(1) / o.hi_, Rational(1) / o.lo_);
  return *this *= inv;
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return {Rational(0), x.magnitude()};
}

Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval min(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval square(const Interval& x) {
  Interval a = abs(x);
  return {a.lo() * a.lo(), a.hi() * a.hi()};
}

Interval pow(const Interval& x, unsigned long exponent) {
  if (exponent == 0) return Interval(1);
  if (exponent % 2 == 0) {
    Interval a = abs(x);
    return {pow(a.lo(), static_cast<long>(exponent)), pow(a.hi(), static_cast<long>(exponent))};
  }
  return {pow(x.lo(), static_cast<long>(exponent)), pow(x.hi(), static_cast<long>(exponent))};
}

Interval sqrt(const Interval& x, long bits) { return root(x, 2, bits); }

Interval root(const Interval& x, unsigned long n, long bits) {
  require(n >= 1, Errc::PreconditionViolation, "root of order 0");
  require(x.hi() >= 0, Errc::PreconditionViolation, "root of a negative interval");
  if (n == 1) return x;
  return {rootn_directed(x.lo(), n, bits, MPFR_RNDD), rootn_directed(x.hi(), n, bits, MPFR_RNDU)};
}

Interval pow(const Interval& x, const Rational& exponent, long bits) {
  if (exponent == 0) return Interval(1);
  if (exponent.get_den() == 1 && exponent > 0) {
    return snap_relative(pow(x, exponent.get_num().get_ui()), bits);
  }
  require(x.lo() > 0, Errc::PreconditionViolation, "fractional power of a non-positive interval");
  const Rational e = abs(exponent);
  const unsigned long q = e.get_den().get_ui();
  const unsigned long p = e.get_num().get_ui();
  Interval r = snap_relative(root(x, q, bits + 16), bits + 16);
  Interval out = snap_relative(pow(r, p), bits + 8);
  if (exponent < 0) out = Interval(1) / out;
  return snap_relative(out, bits);
}

std::string to_scientific(const Interval& x, int digits) { return to_scientific(x.mid(), digits); }

}  // namespace kronav

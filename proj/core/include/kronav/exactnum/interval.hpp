#pragma once

#include <optional>
#include <string>

#include "kronav/exactnum/rational.hpp"

namespace kronav {

/// Closed interval with exact rational endpoints.
///
/// Field operations are exact, so inclusion is automatic. Irrational
/// functions (roots, fractional powers) go through MPFR with directed
/// rounding. Use snapped() to round endpoints outward onto a dyadic grid
/// and keep the numbers small.
class Interval {
 public:
  Interval() = default;
  Interval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT
  Interval(long point) : lo_(point), hi_(point) {}              // NOLINT
  Interval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  Rational width() const { return hi_ - lo_; }
  /// max(|lo|, |hi|)
  Rational magnitude() const;

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  bool subset_of(const Interval& other) const { return other.lo_ <= lo_ && hi_ <= other.hi_; }
  bool overlaps(const Interval& other) const { return !(hi_ < other.lo_ || other.hi_ < lo_); }
  /// +1 / -1 when the interval excludes zero, nullopt otherwise.
  std::optional<int> certified_sign() const;

  /// Outward rounding of both endpoints to the grid 2^-k.
  Interval snapped(long k) const;

  Interval operator-() const { return {-hi_, -lo_}; }
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

Interval abs(const Interval& x);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
Interval pow(const Interval& x, unsigned long exponent);
Interval square(const Interval& x);

/// Enclosure of sqrt(x) for x >= 0, endpoints accurate to about `bits` bits.
Interval sqrt(const Interval& x, long bits = 96);
/// Enclosure of x^(1/n) for x >= 0.
Interval root(const Interval& x, unsigned long n, long bits = 96);
/// Enclosure of x^e for a positive interval x and rational exponent e.
Interval pow(const Interval& x, const Rational& exponent, long bits = 96);

/// Approximate decimal rendering of the midpoint, for reports only.
std::string to_scientific(const Interval& x, int digits = 10);

}  // namespace kronav

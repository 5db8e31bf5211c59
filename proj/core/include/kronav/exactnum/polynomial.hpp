#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kronav/exactnum/rational.hpp"

namespace kronav {

/// Dense univariate polynomial, coefficients stored constant term first.
/// The representation is kept normalized (no trailing zero coefficients),
/// so the zero polynomial has an empty coefficient vector and degree -1.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly monomial(const T& coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x;
      acc = acc + U(*it);
    }
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> out = p.c_;
    for (auto& x : out) x *= s;
    return Poly(std::move(out));
  }
  Poly operator-() const { return T(-1) * *this; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);
/// Clears denominators and content; leading coefficient made positive.
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);
Integer content(const IntPoly& p);

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd over Q.
RatPoly gcd(RatPoly a, RatPoly b);
/// Returns (g, s) with s*a = g (mod b), g = gcd(a, b) monic.
std::pair<RatPoly, RatPoly> half_extended_gcd(const RatPoly& a, const RatPoly& b);
/// Exact division test over Z: returns true and the quotient when b divides a.
bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* quotient);

bool is_squarefree(const IntPoly& p);

/// Number of distinct real roots of a squarefree p in the half-open interval (lo, hi].
int count_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi);

/// Integer coefficient array, constant term first, e.g. "[-2, 0, 1]".
std::string to_string(const IntPoly& p);

}  // namespace kronav

#pragma once

#include <vector>

#include "kronav/exactnum/interval.hpp"
#include "kronav/exactnum/polynomial.hpp"

namespace kronav {

/// Closed disc in the complex plane with dyadic center and rational radius.
struct RootDisc {
  Rational re;
  Rational im;
  Rational radius;
};

/// Rectangular complex enclosure.
struct ComplexInterval {
  Interval re;
  Interval im;

  ComplexInterval() = default;
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexInterval(const Rational& r) : re(r), im(0) {}

  ComplexInterval& operator+=(const ComplexInterval& o);
  ComplexInterval& operator*=(const ComplexInterval& o);
  friend ComplexInterval operator+(ComplexInterval a, const ComplexInterval& b) { return a += b; }
  friend ComplexInterval operator*(ComplexInterval a, const ComplexInterval& b) { return a *= b; }
  ComplexInterval snapped(long k) const { return {re.snapped(k), im.snapped(k)}; }
};

ComplexInterval to_box(const RootDisc& disc);
/// Enclosure of |z| over the box.
Interval modulus(const ComplexInterval& z, long bits = 96);
/// Enclosure of |root| for the root inside the disc.
Interval modulus(const RootDisc& disc, long bits = 96);

/// Certified isolation of all complex roots of a squarefree integer polynomial.
///
/// Approximations come from Aberth iteration (double, then GMP floats at
/// growing precision). Each approximation z_i is certified with the
/// Gerschgorin disc |z - z_i| <= n |W_i|, where W_i is the Weierstrass
/// correction f(z_i) / (lc * prod_{j != i} (z_i - z_j)), evaluated in exact
/// rational arithmetic. When the discs are pairwise disjoint each holds
/// exactly one root. Returned radii satisfy r_i <= 2^-bits * max(1, |z_i|).
std::vector<RootDisc> isolate_complex_roots(const IntPoly& f, long bits);

}  // namespace kronav

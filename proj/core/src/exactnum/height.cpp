#include "kronav/exactnum/height.hpp"

#include "kronav/exactnum/complex_roots.hpp"

namespace kronav {

Interval mahler_measure(const IntPoly& f, long bits) {
  Interval m(Rational(abs(f.leading())));
  if (f.degree() <= 0) return m;
  for (const auto& disc : isolate_complex_roots(f, bits + 16)) {
    m *= max(Interval(1), modulus(disc, bits + 16));
  }
  return m;
}

Interval weil_height_from_minpoly(const IntPoly& minpoly, long bits) {
  const Interval m = mahler_measure(minpoly, bits);
  if (minpoly.degree() == 1) return m;
  return root(m, static_cast<unsigned long>(minpoly.degree()), bits);
}

Interval weil_height(const Rational& x) {
  if (x == 0) return Interval(1);
  const Integer p = abs(x.get_num());
  const Integer& q = x.get_den();
  return Interval(Rational(p > q ? p : q));
}

Interval weil_height(const FieldElement& x, long bits) {
  if (x.is_rational()) return weil_height(x.rational_value());
  return weil_height_from_minpoly(minimal_polynomial(x), bits);
}

}  // namespace kronav

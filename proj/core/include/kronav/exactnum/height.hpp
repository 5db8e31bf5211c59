#pragma once

#include "kronav/exactnum/field.hpp"
#include "kronav/exactnum/interval.hpp"
#include "kronav/exactnum/polynomial.hpp"

namespace kronav {

/// Enclosure of the Mahler measure |lc| * prod max(1, |root|) of a squarefree polynomial.
Interval mahler_measure(const IntPoly& f, long bits = 96);

/// Enclosure of the absolute multiplicative Weil height of x. Rationals
/// p/q in lowest terms give max(|p|, |q|) exactly; zero has height 1.
Interval weil_height(const FieldElement& x, long bits = 96);
Interval weil_height(const Rational& x);

/// Height of x from an already known minimal polynomial.
Interval weil_height_from_minpoly(const IntPoly& minpoly, long bits = 96);

}  // namespace kronav

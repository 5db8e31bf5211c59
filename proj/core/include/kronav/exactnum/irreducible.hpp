#pragma once

#include "kronav/exactnum/polynomial.hpp"

namespace kronav {

/// Certified irreducibility over Q of a nonconstant integer polynomial.
///
/// The polynomial is made primitive and monic (x -> x/a scaling), its
/// complex roots are isolated, and every subset of at most half the roots
/// is tested as a potential factor: the subset trace must enclose an
/// integer, then every elementary symmetric function must. Surviving
/// candidates are confirmed or refuted by exact division, refining the
/// root discs when a refutation shows the enclosures were too coarse.
bool is_irreducible(const IntPoly& f);

}  // namespace kronav

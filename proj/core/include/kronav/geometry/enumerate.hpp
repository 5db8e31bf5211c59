#pragma once

#include <functional>
#include <vector>

#include "kronav/fieldlat/lattice.hpp"

namespace kronav {

struct LatticePoint {
  std::vector<Integer> coeffs;
  std::vector<FieldElement> embedded;
  FieldElement norm;  // exact sup norm
  Interval norm_enclosure;
};

/// Documented enumeration order: exact sup norm, then the l1 norm of the
/// coefficient vector, then coefficient vectors in decreasing lexicographic
/// order (so e_1 precedes e_2 and +v precedes -v). Returns <0, 0, >0.
int enumeration_order(const LatticePoint& a, const LatticePoint& b);

/// Builds a point from its coefficients, with exact norm.
LatticePoint make_point(const EmbeddedLattice& lattice, std::vector<Integer> coeffs);

/// All lattice points with sup norm <= radius (zero included), in enumeration order.
///
/// Candidates come from a coefficient box derived from an invertible row
/// subset of the basis; a double-precision prefilter with rigorous error
/// bounds discards points that are certainly outside, and membership of the
/// rest is decided exactly.
std::vector<LatticePoint> points_within(const EmbeddedLattice& lattice, const Rational& radius);

using PointPredicate = std::function<bool(const LatticePoint&)>;

/// First point in enumeration order with norm <= radius satisfying the predicate.
/// Searches growing radii starting near the shortest basis vector.
/// Throws NotFoundWithinRadius.
LatticePoint enumerate_by_norm(const EmbeddedLattice& lattice, const Rational& radius, const PointPredicate& predicate);

}  // namespace kronav

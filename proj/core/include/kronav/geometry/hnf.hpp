#pragma once

#include <vector>

#include "kronav/exactnum/linalg.hpp"

namespace kronav {

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix identity_int(std::size_t n);
RatMatrix to_rational(const IntMatrix& m);

/// Column-style Hermite normal form H = A U with U unimodular.
///
/// The first `rank` columns of H are nonzero, with pivot rows strictly
/// increasing; each pivot is positive, entries above a pivot are zero and
/// entries to its left are reduced into [0, pivot). Remaining columns are zero.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

HermiteForm hnf(const IntMatrix& a);

/// Full-rank sublattice of Z^n given by basis columns in lattice coordinates.
class Sublattice {
 public:
  explicit Sublattice(IntMatrix coeffs);

  const IntMatrix& coeffs() const { return coeffs_; }
  /// Canonical basis (HNF); equal lattices have equal canonical bases.
  const IntMatrix& canonical() const { return canonical_; }
  const Integer& index() const { return index_; }
  std::size_t dim() const { return coeffs_.rows(); }

  /// Integer solution z of canonical() z = x when x lies in the lattice.
  std::optional<std::vector<Integer>> solve(const std::vector<Integer>& x) const;
  bool contains(const std::vector<Integer>& x) const { return solve(x).has_value(); }

  friend bool operator==(const Sublattice& a, const Sublattice& b) { return a.canonical_ == b.canonical_; }

 private:
  IntMatrix coeffs_;
  IntMatrix canonical_;
  Integer index_;
};

/// Intersection of full-rank sublattices of the same Z^n, via the dual
/// lattice identity (A cap B)* = A* + B*.
Sublattice intersect(const std::vector<Sublattice>& lattices);

/// Lattice generated by the columns of a rational matrix of full row rank,
/// returned as a square basis (columns) in HNF after clearing denominators.
RatMatrix rational_lattice_basis(const RatMatrix& generators);

}  // namespace kronav

#pragma once

#include <vector>

#include "kronav/exactnum/field.hpp"
#include "kronav/exactnum/linalg.hpp"

namespace kronav {

/// Lattice in R^n whose basis vectors (columns) have entries in E.
class EmbeddedLattice {
 public:
  EmbeddedLattice() = default;
  /// Checks that the columns are linearly independent.
  explicit EmbeddedLattice(Matrix<FieldElement> basis);
  static EmbeddedLattice from_columns(const std::vector<std::vector<FieldElement>>& columns);
  /// Lattice with a rational basis inside the given field.
  static EmbeddedLattice from_rational_columns(const FieldPtr& e, const std::vector<std::vector<Rational>>& columns);

  const FieldPtr& field() const { return field_; }
  const Matrix<FieldElement>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.cols(); }
  std::size_t ambient() const { return basis_.rows(); }

  /// Embedded point sum_i c_i b_i.
  std::vector<FieldElement> point(const std::vector<Integer>& coeffs) const;
  /// Exact Gram determinant det(B^T B).
  FieldElement gram_determinant() const;
  /// Enclosure of the covolume sqrt(det(B^T B)).
  Interval covolume(long bits = 96) const;

 private:
  FieldPtr field_;
  Matrix<FieldElement> basis_;
};

/// Sup norm of an exact vector, exact (largest absolute entry).
FieldElement sup_norm(const std::vector<FieldElement>& v);
/// Enclosure of the sup norm.
Interval sup_norm_enclosure(const std::vector<FieldElement>& v, long bits);

}  // namespace kronav

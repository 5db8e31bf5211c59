#pragma once

#include <utility>
#include <vector>

#include "kronav/exactnum/field.hpp"
#include "kronav/exactnum/linalg.hpp"

namespace kronav {

/// Element of K in coordinates over the integral basis of O_K.
using KElement = std::vector<Rational>;

/// Raw description of K and its embeddings into E, as read from a problem file.
struct SubfieldDescription {
  IntPoly minpoly;
  std::vector<FieldElement> real_images;
  std::vector<std::pair<FieldElement, FieldElement>> complex_images;  // (Re, Im) of tau_k(g)
  std::vector<std::vector<Rational>> integral_basis;                  // power-basis coordinates
  Integer disc;
};

/// Number field K = Q(g) with all archimedean embeddings landing in E.
///
/// Validation checks that every real image and every complex image is a
/// root of the minimal polynomial, that the d embeddings are pairwise
/// distinct (no complex image repeated or conjugated), that the integral
/// basis spans a ring containing 1 and that its trace-form determinant
/// equals the supplied discriminant.
class SubfieldK {
 public:
  static SubfieldK create(const FieldPtr& e, SubfieldDescription desc);

  const FieldPtr& ambient() const { return e_; }
  int d() const { return d_; }
  int r1() const { return r1_; }
  int r2() const { return r2_; }
  const Integer& disc() const { return disc_; }
  const IntPoly& minpoly() const { return minpoly_; }
  const std::vector<std::vector<Rational>>& integral_basis() const { return basis_; }

  KElement one() const;
  KElement from_rational(const Rational& q) const;
  KElement mul(const KElement& a, const KElement& b) const;
  /// Matrix of x -> c x in integral-basis coordinates.
  Matrix<Rational> mul_matrix(const KElement& c) const;
  Rational trace(const KElement& a) const;
  /// Power-basis coordinates in the generator g.
  std::vector<Rational> to_power_basis(const KElement& a) const;
  static bool is_integral(const KElement& a);

  IntPoly minimal_polynomial(const KElement& a) const;

  /// Embedding slots in output order: sigma_1..sigma_r1, then
  /// Re tau_1, Im tau_1, ..., Re tau_r2, Im tau_r2.
  std::vector<FieldElement> embed(const KElement& a) const;
  /// Minkowski embedding of a vector in K^w: slot-major, w entries per slot.
  std::vector<FieldElement> embed_vector(const std::vector<KElement>& a) const;

 private:
  SubfieldK() = default;

  FieldPtr e_;
  IntPoly minpoly_;
  int d_ = 0;
  int r1_ = 0;
  int r2_ = 0;
  Integer disc_;
  std::vector<std::vector<Rational>> basis_;
  Matrix<Rational> basis_inverse_;
  // structure_[a][b] = coordinates of w_a * w_b
  std::vector<std::vector<KElement>> structure_;
  // slot_images_[slot][m] = slot value of basis element w_m
  std::vector<std::vector<FieldElement>> slot_images_;
};

}  // namespace kronav

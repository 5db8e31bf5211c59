#pragma once

#include <vector>

#include "kronav/fieldlat/lattice.hpp"
#include "kronav/fieldlat/subfield.hpp"

namespace kronav {

/// One pseudo-basis pair (I_j, y_j): a Z-basis of the fractional ideal I_j
/// and a vector y_j in O_K^w, all in integral-basis coordinates.
struct PseudoBasisEntry {
  std::vector<KElement> ideal;
  std::vector<KElement> y;
};

/// O_K-module M = sum_j I_j y_j inside K^w.
class ModuleM {
 public:
  static ModuleM create(const SubfieldK& k, int w, std::vector<PseudoBasisEntry> pseudo_basis);

  int w() const { return w_; }
  int s() const { return static_cast<int>(entries_.size()); }
  const std::vector<PseudoBasisEntry>& entries() const { return entries_; }
  /// The sd generators beta * y_j over Z, ordered by j then by beta.
  const std::vector<std::vector<KElement>>& z_basis() const { return z_basis_; }
  /// N(I_j) = |det| of the ideal's coordinate matrix.
  const std::vector<Rational>& ideal_norms() const { return norms_; }

 private:
  int w_ = 0;
  std::vector<PseudoBasisEntry> entries_;
  std::vector<std::vector<KElement>> z_basis_;
  std::vector<Rational> norms_;
};

std::vector<FieldElement> minkowski_embed(const std::vector<KElement>& a, const SubfieldK& k);

EmbeddedLattice build_lattice(const ModuleM& m, const SubfieldK& k);

/// D_K(M) = D_K * prod N(I_j)^2.
Rational discriminant_M(const ModuleM& m, const SubfieldK& k);

/// Covolume of the embedded lattice computed two ways.
///
/// The Gram determinant is exact; the closed form
/// 2^(-s r2) |D_K|^(s/2) prod N(I_j) and the form 2^(-s r2) |D_K(M)|^(s/2)
/// are compared against it through their exact squares.
struct DeterminantReport {
  FieldElement gram;
  Interval value;
  Rational closed_form_squared;
  Interval closed_form;
  Rational module_disc_form_squared;
  Interval module_disc_form;
  bool closed_form_agrees = false;
  bool module_disc_form_agrees = false;
};

DeterminantReport determinant(const EmbeddedLattice& lattice, const ModuleM& m, const SubfieldK& k);

}  // namespace kronav

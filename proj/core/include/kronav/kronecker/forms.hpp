#pragma once

#include <vector>

#include "kronav/exactnum/field.hpp"
#include "kronav/exactnum/interval.hpp"
#include "kronav/exactnum/linalg.hpp"
#include "kronav/fieldlat/lattice.hpp"
#include "kronav/fieldlat/subfield.hpp"

namespace kronav {

/// Enclosure of the affine Weil height h(b_1, ..., b_n) over E.
///
/// The archimedean factor is exact up to enclosure width, computed from
/// all complex embeddings of E. The finite part is only bounded: from below
/// by 1 (the result is also at least every h(b_j)), from above by the
/// smaller of prod_j lc_j^(1/d_j) and lcm_j lc_j, where lc_j is the leading
/// coefficient of the minimal polynomial of b_j. For algebraic integers
/// the enclosure is tight.
Interval vector_height(const std::vector<FieldElement>& b, long bits = 96);

/// The t x wd coefficient matrix of the linear forms L_i.
struct FormMatrix {
  Matrix<FieldElement> b;
  std::vector<Interval> row_heights;  // h(L_i)
  Interval height;                    // h(B)

  std::size_t t() const { return b.rows(); }
  std::size_t n() const { return b.cols(); }
  /// (L_1(y), ..., L_t(y)).
  std::vector<FieldElement> apply(const std::vector<FieldElement>& y) const;
};

FormMatrix make_form_matrix(Matrix<FieldElement> b);

/// Q-basis of K_1: the subfield of E generated by the basis entries of the
/// lattice and by every embedding-slot image of the integral basis of K.
std::vector<FieldElement> k1_basis(const EmbeddedLattice& lattice, const SubfieldK& k);

/// True iff 1 and the entries of B are linearly independent over K_1,
/// decided by the Q-rank of {kappa_u beta_v}.
bool independence_check(const FormMatrix& forms, const std::vector<FieldElement>& k1);

/// [K_1(B) : Q].
int ambient_degree(const std::vector<FieldElement>& k1, const FormMatrix& forms);

}  // namespace kronav

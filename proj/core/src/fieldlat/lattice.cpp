#include "kronav/fieldlat/lattice.hpp"

#include "kronav/error.hpp"

namespace kronav {

EmbeddedLattice::EmbeddedLattice(Matrix<FieldElement> basis) : basis_(std::move(basis)) {
  require(basis_.rows() > 0 && basis_.cols() > 0, Errc::Validation, "empty lattice basis");
  field_ = basis_(0, 0).field();
  require(kronav::rank(basis_) == basis_.cols(), Errc::RankDeficient, "lattice basis vectors are linearly dependent");
}

EmbeddedLattice EmbeddedLattice::from_columns(const std::vector<std::vector<FieldElement>>& columns) {
  return EmbeddedLattice(Matrix<FieldElement>::from_columns(columns));
}

EmbeddedLattice EmbeddedLattice::from_rational_columns(const FieldPtr& e,
                                                       const std::vector<std::vector<Rational>>& columns) {
  std::vector<std::vector<FieldElement>> cols;
  for (const auto& c : columns) {
    std::vector<FieldElement> col;
    for (const auto& x : c) col.emplace_back(e, x);
    cols.push_back(std::move(col));
  }
  return from_columns(cols);
}

std::vector<FieldElement> EmbeddedLattice::point(const std::vector<Integer>& coeffs) const {
  require(coeffs.size() == rank(), Errc::Validation, "lattice coordinate vector has the wrong length");
  std::vector<FieldElement> out(ambient(), FieldElement(field_, Rational(0)));
  for (std::size_t j = 0; j < rank(); ++j) {
    if (coeffs[j] == 0) continue;
    const Rational c(coeffs[j]);
    for (std::size_t i = 0; i < ambient(); ++i) out[i] += basis_(i, j) * c;
  }
  return out;
}

FieldElement EmbeddedLattice::gram_determinant() const { return determinant(basis_.transpose() * basis_); }

Interval EmbeddedLattice::covolume(long bits) const { return sqrt(evaluate(gram_determinant(), bits + 8), bits); }

FieldElement sup_norm(const std::vector<FieldElement>& v) {
  require(!v.empty(), Errc::Internal, "sup norm of an empty vector");
  FieldElement best = abs(v[0]);
  for (std::size_t i = 1; i < v.size(); ++i) {
    FieldElement a = abs(v[i]);
    if (compare(a, best) > 0) best = std::move(a);
  }
  return best;
}

Interval sup_norm_enclosure(const std::vector<FieldElement>& v, long bits) {
  Interval best(0);
  for (const auto& x : v) best = max(best, abs(evaluate(x, bits)));
  return best;
}

}  // namespace kronav

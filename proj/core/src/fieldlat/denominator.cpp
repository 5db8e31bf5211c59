#include "kronav/fieldlat/denominator.hpp"

#include <algorithm>

#include "kronav/error.hpp"
#include "kronav/exactnum/height.hpp"
#include "kronav/geometry/enumerate.hpp"
#include "kronav/geometry/hnf.hpp"

namespace kronav {

DenominatorIdeal denominator_ideal(const ModuleM& m, const SubfieldK& k, std::size_t cap) {
  const auto du = static_cast<std::size_t>(k.d());
  // alpha * c is integral for every coordinate c of every generator <=> R u in Z^N,
  // where the rows of R are the rows of all multiplication matrices T_c.
  std::vector<std::vector<Rational>> row_generators;
  for (const auto& gen : m.z_basis()) {
    for (const auto& c : gen) {
      const auto t = k.mul_matrix(c);
      for (std::size_t i = 0; i < du; ++i) row_generators.push_back(t.row(i));
    }
  }
  // Rows as columns, so the lattice they span is Rb Z^d with Rb square.
  const RatMatrix rb = rational_lattice_basis(RatMatrix::from_columns(row_generators));
  // Dual lattice {u : <r, u> in Z for all rows r} has basis columns of rb^-T.
  const auto dual = inverse(rb.transpose());
  require(dual.has_value(), Errc::Internal, "denominator ideal lattice is degenerate");

  DenominatorIdeal out;
  std::vector<std::vector<FieldElement>> cols;
  for (std::size_t j = 0; j < du; ++j) {
    out.z_basis.push_back(dual->column(j));
    cols.push_back(k.embed(out.z_basis.back()));
  }
  out.lattice = EmbeddedLattice::from_columns(cols);

  Rational radius = 0;
  for (const auto& c : cols) radius = max(Interval(radius), sup_norm_enclosure(c, 32)).hi();
  while (true) {
    const auto points = points_within(out.lattice, radius);
    std::vector<KElement> found;
    for (const auto& p : points) {
      bool positive_first = false;
      for (const auto& c : p.coeffs) {
        if (c != 0) {
          positive_first = c > 0;
          break;
        }
      }
      if (!positive_first) continue;
      KElement alpha(du, Rational(0));
      for (std::size_t j = 0; j < du; ++j) {
        for (std::size_t i = 0; i < du; ++i) alpha[i] += Rational(p.coeffs[j]) * out.z_basis[j][i];
      }
      found.push_back(std::move(alpha));
      if (found.size() == cap) break;
    }
    if (found.size() == cap) {
      out.candidates = std::move(found);
      break;
    }
    radius *= 2;
  }
  return out;
}

AlphaHeights alpha_heights(const KElement& alpha, const SubfieldK& k) {
  const IntPoly f = k.minimal_polynomial(alpha);
  require(f.coeff(0) != 0, Errc::PreconditionViolation, "alpha must be nonzero");
  std::vector<Integer> rev(f.coeffs().rbegin(), f.coeffs().rend());
  const IntPoly g = primitive_part(IntPoly(rev));
  return {alpha, weil_height_from_minpoly(f, 96), weil_height_from_minpoly(g, 96)};
}

CKBound c_K_bound(const DenominatorIdeal& ideal, const SubfieldK& k, long kappa, long sd) {
  require(kappa > 0 && sd > 0, Errc::Validation, "exponent must be positive");
  require(!ideal.candidates.empty(), Errc::Internal, "no denominator candidates");
  std::optional<CKBound> best;
  for (const auto& alpha : ideal.candidates) {
    AlphaHeights h = alpha_heights(alpha, k);
    const Interval value = pow(h.h_alpha, static_cast<unsigned long>((kappa + 1) * sd - 1)) *
                           pow(h.h_alpha_inv, static_cast<unsigned long>(kappa));
    if (!best || value.hi() < best->value.hi()) best = CKBound{std::move(h), value};
  }
  return *best;
}

}  // namespace kronav

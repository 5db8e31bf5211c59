#pragma once

#include <vector>

#include "kronav/fieldlat/lattice.hpp"
#include "kronav/fieldlat/module.hpp"

namespace kronav {

/// The fractional ideal {alpha in K : alpha M in O_K^w} with a Z-basis and
/// a list of short nonzero elements (one per +- pair), shortest first by
/// sup norm of the Minkowski embedding.
struct DenominatorIdeal {
  std::vector<KElement> z_basis;
  EmbeddedLattice lattice;
  std::vector<KElement> candidates;
};

DenominatorIdeal denominator_ideal(const ModuleM& m, const SubfieldK& k, std::size_t cap = 200);

/// Heights of alpha and 1/alpha.
struct AlphaHeights {
  KElement alpha;
  Interval h_alpha;
  Interval h_alpha_inv;
};

AlphaHeights alpha_heights(const KElement& alpha, const SubfieldK& k);

/// min h(alpha)^((kappa+1) sd - 1) h(1/alpha)^kappa over the candidates.
struct CKBound {
  AlphaHeights alpha;
  Interval value;
};

CKBound c_K_bound(const DenominatorIdeal& ideal, const SubfieldK& k, long kappa, long sd);

}  // namespace kronav

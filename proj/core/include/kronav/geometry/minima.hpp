#pragma once

#include <optional>
#include <vector>

#include "kronav/fieldlat/lattice.hpp"
#include "kronav/geometry/enumerate.hpp"

namespace kronav {

struct MinimaResult {
  std::vector<LatticePoint> vectors;  // v_i with |v_i| = lambda_i
  std::vector<Interval> lambdas;
};

/// Sup-norm successive minima by exhaustive enumeration. Points are scanned
/// in enumeration order and kept greedily when independent of the previous
/// choices. Throws RankCapExceeded for rank above 10.
MinimaResult successive_minima(const EmbeddedLattice& lattice);

/// Exact check of det / r! <= prod lambda_i <= det through squares in E.
/// The lower inequality is only asserted for full-rank lattices.
struct MinkowskiCheck {
  bool upper_holds = false;
  std::optional<bool> lower_holds;
};

MinkowskiCheck minkowski_check(const EmbeddedLattice& lattice, const MinimaResult& minima);

}  // namespace kronav

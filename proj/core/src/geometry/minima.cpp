#include "kronav/geometry/minima.hpp"

#include "kronav/error.hpp"

namespace kronav {

MinimaResult successive_minima(const EmbeddedLattice& lattice) {
  const std::size_t k = lattice.rank();
  require(k <= 10, Errc::RankCapExceeded, "successive minima are limited to rank 10");
  Rational longest = 0;
  Rational shortest = -1;
  for (std::size_t j = 0; j < k; ++j) {
    const Rational col = sup_norm_enclosure(lattice.basis().column(j), 32).hi();
    if (col > longest) longest = col;
    if (shortest < 0 || col < shortest) shortest = col;
  }
  for (Rational radius = shortest;; radius = radius * 2 > longest ? longest : Rational(radius * 2)) {
    MinimaResult result;
    std::vector<std::vector<Rational>> chosen;
    for (auto& p : points_within(lattice, radius)) {
      if (result.vectors.size() == k) break;
      auto trial = chosen;
      std::vector<Rational> coeffs(p.coeffs.begin(), p.coeffs.end());
      trial.push_back(coeffs);
      if (rank(Matrix<Rational>::from_columns(trial)) < trial.size()) continue;
      chosen = std::move(trial);
      result.lambdas.push_back(p.norm_enclosure);
      result.vectors.push_back(std::move(p));
    }
    if (result.vectors.size() == k) return result;
    require(radius < longest, Errc::Internal, "basis vectors not found within their own norm");
  }
}

MinkowskiCheck minkowski_check(const EmbeddedLattice& lattice, const MinimaResult& minima) {
  const FieldElement gram = lattice.gram_determinant();
  FieldElement prod(lattice.field(), Rational(1));
  for (const auto& v : minima.vectors) prod *= v.norm;
  const FieldElement prod_sq = prod * prod;
  MinkowskiCheck check;
  check.upper_holds = compare(prod_sq, gram) <= 0;
  if (lattice.rank() == lattice.ambient()) {
    Integer fact = 1;
    for (std::size_t i = 2; i <= lattice.rank(); ++i) fact *= static_cast<unsigned long>(i);
    const Rational scale = Rational(1) / Rational(fact * fact);
    check.lower_holds = compare(gram * scale, prod_sq) <= 0;
  }
  return check;
}

}  // namespace kronav

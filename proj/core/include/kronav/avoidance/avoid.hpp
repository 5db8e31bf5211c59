#pragma once

#include <cstddef>
#include <vector>

#include "kronav/avoidance/polynomial_system.hpp"
#include "kronav/fieldlat/lattice.hpp"
#include "kronav/geometry/hnf.hpp"
#include "kronav/geometry/minima.hpp"

namespace kronav {

/// P_i(y) for the chosen P_i of system i, with an enclosure that excludes zero.
struct NonvanishingCertificate {
  std::size_t system = 0;
  std::size_t polynomial = 0;
  FieldElement value;
  Interval enclosure;
  long bits = 0;
};

struct AvoidWitness {
  enum class Kind { Polynomial, Sublattice };

  Kind kind = Kind::Polynomial;
  std::vector<Integer> coeffs;  // in the lattice basis
  std::vector<Integer> xi;      // grid point, polynomial kind only
  std::vector<FieldElement> embedded;
  FieldElement norm;
  Interval norm_enclosure;
  Interval bound;
  std::vector<NonvanishingCertificate> certificates;
};

/// Encloses a nonzero value starting at `start_bits` and doubling until the
/// enclosure excludes zero. Throws PrecisionCap past `cap_bits`.
NonvanishingCertificate certify_nonzero(const FieldElement& value, long start_bits = 64, long cap_bits = 1L << 14);

/// Grid {0..M}^r without the origin, ordered by sup norm, then l1 norm,
/// then decreasing lexicographic order.
std::vector<std::vector<Integer>> avoidance_grid(std::size_t rank, unsigned m);

/// sum_i xi_i v_i in lattice coordinates.
std::vector<Integer> grid_combination(const MinimaResult& minima, const std::vector<Integer>& xi);

/// sd M_S (sqrt2 h(alpha))^(sd-1) det.
Interval grid_witness_bound(std::size_t rank, unsigned m_s, const Interval& h_alpha, const Interval& det);

/// Index of the chosen polynomial in each system; the product of the chosen
/// polynomials is the polynomial P that grid_avoid keeps away from zero.
struct ProductPoly {
  std::vector<std::size_t> chosen;
  unsigned degree = 0;
};

/// For each system, the first polynomial that is nonzero at some grid point.
/// Empty for a trivial zero locus. Evaluation is exact, so a system that
/// vanishes on the whole grid vanishes on the lattice: LatticeInZeroLocus.
ProductPoly select_product_poly(const PolySystemSet& systems, const EmbeddedLattice& lattice,
                                const MinimaResult& minima);

/// First grid point y = v(xi) with P(y) != 0, in avoidance_grid order.
/// For a trivial zero locus any polynomial of each system may certify y.
/// Asserts |y| <= sd M_S (sqrt(2) h(alpha))^(sd-1) det against the lower
/// enclosure of the bound.
AvoidWitness grid_avoid(const PolySystemSet& systems, const ProductPoly& product, const EmbeddedLattice& lattice,
                        const MinimaResult& minima, const Interval& h_alpha, const Interval& det);

/// (sqrt(2) h(alpha))^(sd-1) det (sum D/D_i - m + 1) + D^(1/sd), with
/// D_i = index_i * det.
Interval sublattice_bound(const std::vector<Sublattice>& gammas, std::size_t rank, const Interval& h_alpha,
                          const Interval& det);

/// Shortest lattice point outside every sublattice, in enumeration order.
/// Throws NoProperSublattice when some Gamma_i is the whole lattice.
AvoidWitness sublattice_avoid(const std::vector<Sublattice>& gammas, const EmbeddedLattice& lattice,
                              const Interval& h_alpha, const Interval& det);

/// Independent re-checks of a witness.
bool avoids(const PolySystemSet& systems, const std::vector<FieldElement>& y);
bool avoids(const std::vector<Sublattice>& gammas, const std::vector<Integer>& coeffs);

}  // namespace kronav

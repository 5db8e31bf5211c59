#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kronav/avoidance/avoid.hpp"
#include "kronav/fieldlat/denominator.hpp"
#include "kronav/fieldlat/module.hpp"
#include "kronav/io/problem.hpp"
#include "kronav/kronecker/bounds.hpp"
#include "kronav/kronecker/kr.hpp"
#include "kronav/kronecker/theta.hpp"

namespace kronav {

/// Witness-independent data shared by solving, bounding and verifying.
struct Setup {
  int theorem = 1;
  std::vector<FieldElement> k1;
  int ell = 0;
  bool ell_overridden = false;
  DeterminantReport det;
  Interval covolume;
  DenominatorIdeal ideal;
  CKBound c_k;
  BoundInputs inputs;
  unsigned m_s = 0;  // theorem 1
  // theorem 2: the alpha minimizing the bound, and its sublattice data
  std::optional<AlphaHeights> alpha2;
  std::optional<SublatticeInputs> sub;
  Integer d_prime;

  const AlphaHeights& alpha() const { return alpha2 ? *alpha2 : c_k.alpha; }
};

/// Checks the avoidance mode against the theorem, then independence
/// (DependentForms), then builds every constant. For theorem 2 the alpha is
/// chosen among the denominator candidates by the smallest bound at eps.
Setup prepare(const Problem& problem, int theorem, const Rational& eps);

/// The theorem's displayed bound at eps.
BoundReport theorem_bound(const Setup& setup, const Rational& eps);

struct SolveOptions {
  unsigned threads = 1;
  std::optional<long> precision_cap;
  std::optional<Integer> search_cap;
};

struct Certificate {
  int theorem = 1;
  std::string problem_hash;
  AvoidWitness witness;
  ThetaSystem thetas;
  std::optional<ThetaSystem> scaled;  // D' theta for theorem 2
  Integer q;                          // q for theorem 1, g for theorem 2
  Integer d_prime = 1;
  Integer multiplier;                 // x = multiplier * y
  std::vector<Integer> x_coords;
  std::vector<FieldElement> x_embedded;
  std::vector<Integer> p;
  std::vector<FieldElement> residuals;  // L_i(x) - a_i - p_i
  FieldElement x_norm;
  Interval x_norm_enclosure;
  BoundReport bound;
  Integer search_cap;
  Interval kr_sharp;
  Interval kr_simplified;
  Interval h_theta_bound;
  long search_bits = 0;
  /// Canonical JSON, stamped.
  std::string document;
};

/// Runs the theorem 1 or theorem 2 pipeline on the problem's epsilon.
Certificate solve(const Problem& problem, int theorem, const SolveOptions& options = {});

struct BoundRow {
  Rational epsilon;
  BoundReport report;
};

/// Bound reports over a list of epsilons; no solving.
std::vector<BoundRow> bound_table(const Problem& problem, int theorem, const std::vector<Rational>& epsilons);

/// First nonzero lattice point in enumeration order, with sup norm at most
/// radius, that avoids the problem's exceptional set and satisfies every
/// approximation inequality, decided exactly. Throws CapExceeded.
LatticePoint oracle_min_x(const Problem& problem, const Rational& radius);

/// Smallest q for the problem's own thetas after avoidance: the oracle
/// counterpart of the search step of solve. Throws CapExceeded.
Integer oracle_min_q_for(const Problem& problem, int theorem, const Integer& cap);

}  // namespace kronav

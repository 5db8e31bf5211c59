#pragma once

#include <string>
#include <vector>

#include "kronav/exactnum/interval.hpp"

namespace kronav {

struct BoundItem {
  std::string name;
  Interval value;
};

/// value = prefactor * epsilon_factor + additive, with the epsilon factor
/// eps^(-ell+1) kept exact so that scaling in eps is checkable exactly.
struct BoundReport {
  long kappa = 0;
  long ell = 0;
  std::vector<BoundItem> items;
  Interval prefactor;
  Rational epsilon_factor;
  Interval additive;
  Interval value;
  /// Core expression of the simplified ≪ form, without its implied constant.
  Interval simplified;
};

/// Parameters shared by both bounds.
struct BoundInputs {
  long t = 0;
  long ell = 0;
  long s = 0;
  long d = 0;
  long r1 = 0;
  long r2 = 0;
  long w = 0;
  Rational disc_m;  // D_K(M)
  Interval h_b;
  Interval c_k;
};

long kappa(long t, long ell);

/// 2^(-s r2) |D_K(M)|^(s/2).
Interval bound_det(const BoundInputs& in);

BoundReport bound_theorem1(const BoundInputs& in, unsigned long m_s, const Rational& eps);

/// Sublattice data: indices |Lambda : Gamma_i|; the determinants are
/// D_i = index_i * det with det = bound_det(in).
struct SublatticeInputs {
  std::vector<Integer> indices;
  Interval h_alpha;
  Interval h_alpha_inv;
};

Interval e_alpha(const BoundInputs& in, const SublatticeInputs& sub);
BoundReport bound_theorem2(const BoundInputs& in, const SublatticeInputs& sub, const Rational& eps);

/// h(theta_i) <= 2^(sd/2) sd (wd)^(3/2) M_S h(alpha)^sd h(1/alpha) det h(B).
Interval theta_height_bound_grid(const BoundInputs& in, unsigned long m_s, const Interval& h_alpha,
                                 const Interval& h_alpha_inv, const Interval& det);
/// h(theta_i) <= (wd)^(3/2) sqrt2 h(alpha) h(1/alpha) h(B) * y_bound, where
/// y_bound is the sublattice witness bound.
Interval theta_height_bound_sublattice(const BoundInputs& in, const Interval& h_alpha, const Interval& h_alpha_inv,
                                       const Interval& y_bound);

}  // namespace kronav

#pragma once

#include <optional>
#include <vector>

#include "kronav/exactnum/field.hpp"
#include "kronav/exactnum/interval.hpp"
#include "kronav/exactnum/polynomial.hpp"
#include "kronav/kronecker/forms.hpp"

namespace kronav {

/// theta_1..theta_t with the arithmetic data entering the Liouville constant.
struct ThetaSystem {
  std::vector<FieldElement> thetas;
  std::vector<IntPoly> minpolys;
  std::vector<int> degrees;
  std::vector<Interval> heights;
  int e = 0;             // [Q(theta_1, ..., theta_t) : Q]
  Integer a;             // lcm of the leading coefficients
  Interval a_bound;      // prod (2 h(theta_j))^d_j
  Interval c1;

  std::size_t t() const { return thetas.size(); }
  int max_degree() const;
};

/// Throws ZeroTheta for a zero entry, DependentForms when 1, theta_1, ...,
/// theta_t are Q-linearly dependent, and DegreeExceedsEll when ell is given
/// and smaller than max(e, d_j).
ThetaSystem make_theta_system(std::vector<FieldElement> thetas, std::optional<int> ell = std::nullopt);

/// theta_i = L_i(y).
ThetaSystem thetas_from_witness(const FormMatrix& forms, const std::vector<FieldElement>& y,
                                std::optional<int> ell = std::nullopt);

/// ((t+1) max h_j^d_j)^(e-1) prod (2 h_j)^(e d_j).
Interval liouville_constant(const std::vector<Interval>& heights, const std::vector<int>& degrees, int e);

}  // namespace kronav

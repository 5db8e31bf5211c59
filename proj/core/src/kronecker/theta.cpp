#include "kronav/kronecker/theta.hpp"

#include <algorithm>

#include "kronav/error.hpp"
#include "kronav/exactnum/height.hpp"
#include "kronav/exactnum/span.hpp"

namespace kronav {

int ThetaSystem::max_degree() const {
  int out = e;
  for (int d : degrees) out = std::max(out, d);
  return out;
}

Interval liouville_constant(const std::vector<Interval>& heights, const std::vector<int>& degrees, int e) {
  require(heights.size() == degrees.size() && !heights.empty(), Errc::Internal, "liouville data mismatch");
  const auto t = static_cast<long>(heights.size());
  Interval top(0);
  Interval product(1);
  for (std::size_t j = 0; j < heights.size(); ++j) {
    const auto d = static_cast<unsigned long>(degrees[j]);
    top = max(top, pow(heights[j], d));
    product *= pow(Interval(2) * heights[j], static_cast<unsigned long>(e) * d);
  }
  return pow(Interval(Rational(t + 1)) * top, static_cast<unsigned long>(e - 1)) * product;
}

ThetaSystem make_theta_system(std::vector<FieldElement> thetas, std::optional<int> ell) {
  require(!thetas.empty(), Errc::Validation, "no forms");
  ThetaSystem s;
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    require(!thetas[j].is_zero(), Errc::ZeroTheta, "theta_" + std::to_string(j + 1) + " = L(y) is zero");
  }
  const FieldPtr& e = thetas.front().field();
  std::vector<FieldElement> with_one{FieldElement(e, Rational(1))};
  with_one.insert(with_one.end(), thetas.begin(), thetas.end());
  require(q_rank(with_one) == with_one.size(), Errc::DependentForms,
          "1, theta_1, ..., theta_t are linearly dependent over Q");

  s.a = 1;
  s.a_bound = Interval(1);
  for (const auto& theta : thetas) {
    IntPoly f = minimal_polynomial(theta);
    const Interval h = weil_height_from_minpoly(f, 96);
    s.degrees.push_back(f.degree());
    s.a = lcm(s.a, abs(f.leading()));
    s.a_bound *= pow(Interval(2) * h, static_cast<unsigned long>(f.degree()));
    s.heights.push_back(h);
    s.minpolys.push_back(std::move(f));
  }
  s.e = static_cast<int>(generated_subfield(e, thetas).size());
  s.thetas = std::move(thetas);
  require(Rational(s.a) <= s.a_bound.lo(), Errc::Internal, "lcm of leading coefficients exceeds its height bound");
  s.c1 = liouville_constant(s.heights, s.degrees, s.e);
  if (ell) {
    require(*ell >= s.max_degree(), Errc::DegreeExceedsEll,
            "ell = " + std::to_string(*ell) + " is below max(e, d_j) = " + std::to_string(s.max_degree()));
  }
  return s;
}

ThetaSystem thetas_from_witness(const FormMatrix& forms, const std::vector<FieldElement>& y, std::optional<int> ell) {
  return make_theta_system(forms.apply(y), ell);
}

}  // namespace kronav

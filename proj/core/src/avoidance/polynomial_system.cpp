#include "kronav/avoidance/polynomial_system.hpp"

#include <algorithm>
#include <numeric>

#include "kronav/error.hpp"

namespace kronav {

HomogeneousPoly HomogeneousPoly::create(std::size_t variables, const std::map<Exponents, Rational>& terms) {
  require(variables > 0, Errc::Validation, "polynomial needs at least one variable");
  HomogeneousPoly p;
  p.variables_ = variables;
  bool first = true;
  for (const auto& [exps, coeff] : terms) {
    require(exps.size() == variables, Errc::Validation,
            "exponent vector has " + std::to_string(exps.size()) + " entries, expected " + std::to_string(variables));
    if (coeff == 0) continue;
    const unsigned deg = std::accumulate(exps.begin(), exps.end(), 0U);
    if (first) {
      p.degree_ = deg;
      first = false;
    }
    require(deg == p.degree_, Errc::Validation, "polynomial is not homogeneous");
    p.terms_.emplace(exps, coeff);
  }
  require(!p.terms_.empty(), Errc::Validation, "zero polynomial in avoidance system");
  require(p.degree_ > 0, Errc::Validation, "constant polynomial in avoidance system");
  return p;
}

FieldElement HomogeneousPoly::evaluate(const std::vector<FieldElement>& x) const {
  require(x.size() == variables_, Errc::Internal, "evaluation point has wrong dimension");
  // powers[i][k] = x_i^k
  std::vector<std::vector<FieldElement>> powers(variables_);
  for (std::size_t i = 0; i < variables_; ++i) {
    powers[i].push_back(one_like(x[i]));
    for (unsigned k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * x[i]);
  }
  FieldElement acc = zero_like(x[0]);
  for (const auto& [exps, coeff] : terms_) {
    FieldElement term(x[0].field(), coeff);
    for (std::size_t i = 0; i < variables_; ++i) {
      if (exps[i] != 0) term *= powers[i][exps[i]];
    }
    acc += term;
  }
  return acc;
}

PolySystemSet PolySystemSet::create(std::size_t variables, std::vector<std::vector<HomogeneousPoly>> systems,
                                    bool zero_locus_trivial) {
  PolySystemSet s;
  s.variables_ = variables;
  s.trivial_ = zero_locus_trivial;
  unsigned total = 0;
  for (const auto& system : systems) {
    require(!system.empty(), Errc::Validation, "empty polynomial system");
    unsigned top = 0;
    for (const auto& p : system) {
      require(p.variables() == variables, Errc::Validation, "polynomial variable count differs from the ambient dimension");
      top = std::max(top, p.degree());
    }
    total += top;
  }
  require(zero_locus_trivial || !systems.empty(), Errc::Validation, "no avoidance systems given");
  s.systems_ = std::move(systems);
  s.m_s_ = zero_locus_trivial ? 1U : total;
  return s;
}

}  // namespace kronav

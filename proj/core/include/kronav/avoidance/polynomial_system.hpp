#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "kronav/exactnum/field.hpp"

namespace kronav {

/// Exponent vector of a monomial in x_1..x_n.
using Exponents = std::vector<unsigned>;

/// Nonzero homogeneous polynomial of positive degree with rational coefficients.
class HomogeneousPoly {
 public:
  /// Drops zero coefficients, then rejects the zero polynomial, constants,
  /// mixed degrees and exponent vectors of the wrong length.
  static HomogeneousPoly create(std::size_t variables, const std::map<Exponents, Rational>& terms);

  std::size_t variables() const { return variables_; }
  unsigned degree() const { return degree_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  FieldElement evaluate(const std::vector<FieldElement>& x) const;

 private:
  std::size_t variables_ = 0;
  unsigned degree_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// The avoidance family S_1..S_m. When zero_locus_trivial is set the caller
/// asserts that the union of zero sets is {0}; M_S is then 1 and the systems
/// may be empty.
class PolySystemSet {
 public:
  static PolySystemSet create(std::size_t variables, std::vector<std::vector<HomogeneousPoly>> systems,
                              bool zero_locus_trivial);

  std::size_t variables() const { return variables_; }
  const std::vector<std::vector<HomogeneousPoly>>& systems() const { return systems_; }
  bool zero_locus_trivial() const { return trivial_; }
  /// Sum over i of max deg P for P in S_i, or 1 for a trivial zero locus.
  unsigned m_s() const { return m_s_; }

 private:
  std::size_t variables_ = 0;
  std::vector<std::vector<HomogeneousPoly>> systems_;
  bool trivial_ = false;
  unsigned m_s_ = 1;
};

}  // namespace kronav

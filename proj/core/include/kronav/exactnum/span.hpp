#pragma once

#include <cstddef>
#include <vector>

#include "kronav/exactnum/field.hpp"

namespace kronav {

/// Incrementally built Q-span of rational vectors, kept in echelon form.
class QSpan {
 public:
  explicit QSpan(std::size_t dim) : dim_(dim) {}

  /// Adds v when it is independent of the span; returns whether it was.
  bool add(const std::vector<Rational>& v);
  bool contains(const std::vector<Rational>& v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Q-rank of a family of elements of E.
std::size_t q_rank(const std::vector<FieldElement>& elements);

/// Q-basis of the subfield of E generated by the given elements, starting
/// with 1 and closed under multiplication by every generator.
std::vector<FieldElement> generated_subfield(const FieldPtr& e, const std::vector<FieldElement>& generators);

}  // namespace kronav

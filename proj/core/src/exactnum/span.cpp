#include "kronav/exactnum/span.hpp"

#include "kronav/error.hpp"

namespace kronav {

std::vector<Rational> QSpan::reduce(std::vector<Rational> v) const {
  require(v.size() == dim_, Errc::Internal, "span vector has wrong dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (rows_[r][j] != 0) v[j] -= c * rows_[r][j];
    }
  }
  return v;
}

bool QSpan::add(const std::vector<Rational>& v) {
  std::vector<Rational> red = reduce(v);
  std::size_t pivot = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (red[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot == dim_) return false;
  const Rational inv = 1 / red[pivot];
  for (auto& x : red) x *= inv;
  for (auto& row : rows_) {
    const Rational c = row[pivot];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) row[j] -= c * red[j];
  }
  rows_.push_back(std::move(red));
  pivots_.push_back(pivot);
  return true;
}

bool QSpan::contains(const std::vector<Rational>& v) const {
  for (const auto& x : reduce(v)) {
    if (x != 0) return false;
  }
  return true;
}

std::size_t q_rank(const std::vector<FieldElement>& elements) {
  if (elements.empty()) return 0;
  QSpan span(static_cast<std::size_t>(elements.front().field()->degree()));
  for (const auto& x : elements) span.add(x.coords());
  return span.rank();
}

std::vector<FieldElement> generated_subfield(const FieldPtr& e, const std::vector<FieldElement>& generators) {
  QSpan span(static_cast<std::size_t>(e->degree()));
  std::vector<FieldElement> basis{FieldElement(e, Rational(1))};
  span.add(basis.front().coords());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& g : generators) {
      FieldElement prod = basis[i] * g;
      if (span.add(prod.coords())) basis.push_back(std::move(prod));
    }
  }
  return basis;
}

}  // namespace kronav

#include "kronav/kronecker/forms.hpp"

#include <algorithm>

#include "kronav/error.hpp"
#include "kronav/exactnum/height.hpp"
#include "kronav/exactnum/span.hpp"

namespace kronav {

Interval vector_height(const std::vector<FieldElement>& b, long bits) {
  std::vector<const FieldElement*> nonzero;
  for (const auto& x : b) {
    if (!x.is_zero()) nonzero.push_back(&x);
  }
  if (nonzero.empty()) return Interval(1);
  const FieldPtr& e = nonzero.front()->field();

  std::vector<Interval> local(static_cast<std::size_t>(e->degree()), Interval(1));
  Interval lower(1);
  Interval finite_product(1);
  Integer finite_lcm = 1;
  for (const FieldElement* x : nonzero) {
    const auto conj = conjugates(*x, bits);
    for (std::size_t i = 0; i < conj.size(); ++i) local[i] = max(local[i], modulus(conj[i], bits));
    const IntPoly f = minimal_polynomial(*x);
    const Integer lc = abs(f.leading());
    finite_product *= root(Interval(Rational(lc)), static_cast<unsigned long>(f.degree()), bits);
    finite_lcm = lcm(finite_lcm, lc);
    lower = max(lower, weil_height_from_minpoly(f, bits));
  }
  Interval arch(1);
  for (const auto& m : local) arch *= m;
  arch = root(arch, static_cast<unsigned long>(e->degree()), bits);
  const Rational finite_hi = std::min(finite_product.hi(), Rational(finite_lcm));
  const Rational lo = std::max(arch.lo(), lower.lo());
  const Rational hi = arch.hi() * finite_hi;
  return {lo, std::max(lo, hi)};
}

std::vector<FieldElement> FormMatrix::apply(const std::vector<FieldElement>& y) const {
  require(y.size() == b.cols(), Errc::Internal, "form applied to vector of wrong length");
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    FieldElement acc = zero_like(y.at(0));
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!y[j].is_zero()) acc += b(i, j) * y[j];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

FormMatrix make_form_matrix(Matrix<FieldElement> b) {
  require(b.rows() > 0 && b.cols() > 0, Errc::Validation, "form matrix must be nonempty");
  FormMatrix f;
  std::vector<FieldElement> all;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const auto row = b.row(i);
    f.row_heights.push_back(vector_height(row));
    all.insert(all.end(), row.begin(), row.end());
  }
  f.height = vector_height(all);
  f.b = std::move(b);
  return f;
}

std::vector<FieldElement> k1_basis(const EmbeddedLattice& lattice, const SubfieldK& k) {
  std::vector<FieldElement> gens;
  const auto& m = lattice.basis();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) gens.push_back(m(i, j));
  }
  const auto d = static_cast<std::size_t>(k.d());
  for (std::size_t c = 0; c < d; ++c) {
    KElement unit(d, Rational(0));
    unit[c] = 1;
    const auto slots = k.embed(unit);
    gens.insert(gens.end(), slots.begin(), slots.end());
  }
  return generated_subfield(lattice.field(), gens);
}

bool independence_check(const FormMatrix& forms, const std::vector<FieldElement>& k1) {
  require(!k1.empty(), Errc::Internal, "empty K_1 basis");
  std::vector<FieldElement> betas{one_like(k1.front())};
  for (std::size_t i = 0; i < forms.b.rows(); ++i) {
    for (std::size_t j = 0; j < forms.b.cols(); ++j) betas.push_back(forms.b(i, j));
  }
  std::vector<FieldElement> products;
  for (const auto& kappa : k1) {
    for (const auto& beta : betas) products.push_back(kappa * beta);
  }
  return q_rank(products) == betas.size() * k1.size();
}

int ambient_degree(const std::vector<FieldElement>& k1, const FormMatrix& forms) {
  require(!k1.empty(), Errc::Internal, "empty K_1 basis");
  std::vector<FieldElement> gens = k1;
  for (std::size_t i = 0; i < forms.b.rows(); ++i) {
    for (std::size_t j = 0; j < forms.b.cols(); ++j) gens.push_back(forms.b(i, j));
  }
  return static_cast<int>(generated_subfield(k1.front().field(), gens).size());
}

}  // namespace kronav

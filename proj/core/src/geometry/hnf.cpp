#include "kronav/geometry/hnf.hpp"

#include "kronav/error.hpp"

namespace kronav {

IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

namespace {

// col_dst -= q * col_src on both matrices
void axpy_column(IntMatrix& h, IntMatrix& u, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < h.rows(); ++i) h(i, dst) -= q * h(i, src);
  for (std::size_t i = 0; i < u.rows(); ++i) u(i, dst) -= q * u(i, src);
}

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) {
  HermiteForm out{a, identity_int(a.cols()), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t n = h.cols();
  std::size_t k = 0;
  for (std::size_t row = 0; row < h.rows() && k < n; ++row) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = k; j < n; ++j) {
        if (h(row, j) == 0) continue;
        if (best == n || abs(h(row, j)) < abs(h(row, best))) best = j;
      }
      if (best == n) break;
      swap_columns(h, k, best);
      swap_columns(u, k, best);
      bool done = true;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (h(row, j) == 0) continue;
        axpy_column(h, u, j, k, floor_div(h(row, j), h(row, k)));
        if (h(row, j) != 0) done = false;
      }
      if (done) break;
    }
    if (k >= n || h(row, k) == 0) continue;
    if (h(row, k) < 0) {
      negate_column(h, k);
      negate_column(u, k);
    }
    for (std::size_t j = 0; j < k; ++j) axpy_column(h, u, j, k, floor_div(h(row, j), h(row, k)));
    out.pivot_rows.push_back(row);
    ++k;
  }
  out.rank = k;
  return out;
}

Sublattice::Sublattice(IntMatrix coeffs) : coeffs_(std::move(coeffs)) {
  require(coeffs_.rows() == coeffs_.cols() && coeffs_.rows() > 0, Errc::Validation,
          "sublattice basis must be a square integer matrix");
  HermiteForm form = hnf(coeffs_);
  require(form.rank == coeffs_.rows(), Errc::Validation, "sublattice basis is not full rank");
  canonical_ = std::move(form.h);
  index_ = 1;
  for (std::size_t i = 0; i < canonical_.rows(); ++i) index_ *= canonical_(i, i);
}

std::optional<std::vector<Integer>> Sublattice::solve(const std::vector<Integer>& x) const {
  require(x.size() == dim(), Errc::Validation, "membership test dimension mismatch");
  const std::size_t n = dim();
  std::vector<Integer> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer r = x[i];
    for (std::size_t j = 0; j < i; ++j) r -= canonical_(i, j) * z[j];
    if (!mpz_divisible_p(r.get_mpz_t(), canonical_(i, i).get_mpz_t())) return std::nullopt;
    z[i] = r / canonical_(i, i);
  }
  return z;
}

RatMatrix rational_lattice_basis(const RatMatrix& generators) {
  Integer den = 1;
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    for (std::size_t j = 0; j < generators.cols(); ++j) den = lcm(den, generators(i, j).get_den());
  }
  IntMatrix scaled(generators.rows(), generators.cols(), Integer(0));
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    for (std::size_t j = 0; j < generators.cols(); ++j) {
      scaled(i, j) = Integer(generators(i, j) * Rational(den));
    }
  }
  const HermiteForm form = hnf(scaled);
  require(form.rank == generators.rows(), Errc::Internal, "generators do not span a full-rank lattice");
  RatMatrix basis(generators.rows(), generators.rows(), Rational(0));
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < basis.cols(); ++j) basis(i, j) = make_rational(form.h(i, j), den);
  }
  return basis;
}

Sublattice intersect(const std::vector<Sublattice>& lattices) {
  require(!lattices.empty(), Errc::Validation, "intersection of an empty family");
  Sublattice acc = lattices.front();
  for (std::size_t idx = 1; idx < lattices.size(); ++idx) {
    const Sublattice& other = lattices[idx];
    require(other.dim() == acc.dim(), Errc::Validation, "sublattices of different dimensions");
    const std::size_t n = acc.dim();
    const auto d1 = inverse(to_rational(acc.canonical()).transpose());
    const auto d2 = inverse(to_rational(other.canonical()).transpose());
    RatMatrix both(n, 2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        both(i, j) = (*d1)(i, j);
        both(i, n + j) = (*d2)(i, j);
      }
    }
    const RatMatrix dual_sum = rational_lattice_basis(both);
    const auto omega = inverse(dual_sum.transpose());
    IntMatrix basis(n, n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& v = (*omega)(i, j);
        require(v.get_den() == 1, Errc::Internal, "intersection basis is not integral");
        basis(i, j) = v.get_num();
      }
    }
    acc = Sublattice(std::move(basis));
  }
  return acc;
}

}  // namespace kronav

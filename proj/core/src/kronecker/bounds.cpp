#include "kronav/kronecker/bounds.hpp"

#include "kronav/error.hpp"

namespace kronav {

namespace {

Integer factorial(long n) {
  Integer out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

// 2^(num/2)
Interval pow2_half(long num) {
  if (num % 2 == 0) return Interval(pow(Rational(2), num / 2));
  return Interval(pow(Rational(2), (num - 1) / 2)) * sqrt(Interval(2), 128);
}

Interval ipow(const Interval& x, long n) { return pow(x, static_cast<unsigned long>(n)); }

Interval wd_three_halves(const BoundInputs& in) {
  const Interval wd(Rational(in.w * in.d));
  return wd * sqrt(wd, 128);
}

// (t+1)^(3l-1) (t!)^(2l)
Interval common_factor(const BoundInputs& in) {
  return Interval(Rational(pow(Integer(in.t + 1), static_cast<unsigned long>(3 * in.ell - 1)) *
                           pow(factorial(in.t), static_cast<unsigned long>(2 * in.ell))));
}

Interval abs_disc_power(const BoundInputs& in, long num, long den) {
  return pow(Interval(abs(in.disc_m)), make_rational(num, den), 128);
}

void finish(BoundReport& r, const Rational& eps) {
  r.epsilon_factor = pow(eps, 1 - r.ell);
  r.value = r.prefactor * Interval(r.epsilon_factor) + r.additive;
  r.simplified *= Interval(r.epsilon_factor);
}

void validate(const BoundInputs& in, const Rational& eps) {
  require(in.t >= 1 && in.ell >= 1 && in.s >= 1 && in.d >= 1 && in.w >= in.s, Errc::Validation,
          "bound parameters out of range");
  require(in.d == in.r1 + 2 * in.r2, Errc::Validation, "signature does not match degree");
  require(eps > 0, Errc::Validation, "epsilon must be positive");
  require(kappa(in.t, in.ell) > 0, Errc::Validation, "exponent kappa must be positive");
}

}  // namespace

long kappa(long t, long ell) { return ell * ell * (t + 1) - ell; }

Interval bound_det(const BoundInputs& in) {
  return Interval(pow(Rational(2), -in.s * in.r2)) * abs_disc_power(in, in.s, 2);
}

BoundReport bound_theorem1(const BoundInputs& in, unsigned long m_s, const Rational& eps) {
  validate(in, eps);
  BoundReport r;
  r.ell = in.ell;
  r.kappa = kappa(in.t, in.ell);
  const long k = r.kappa;
  const long sd = in.s * in.d;
  const Interval a_k = pow2_half(2 * (in.ell * in.t * (in.ell - 1) + in.s * in.r1 * k) + sd - 1) * common_factor(in);
  const Interval lattice_factor =
      ipow(Interval(Rational(static_cast<long>(sd * static_cast<long>(m_s)))) * abs_disc_power(in, in.s, 2), k + 1);
  const Interval form_factor = ipow(wd_three_halves(in) * in.h_b, k);
  r.items = {{"a_K", a_k},
             {"(sd M_S |D_K(M)|^(s/2))^(kappa+1)", lattice_factor},
             {"((wd)^(3/2) h(B))^kappa", form_factor},
             {"c_K", in.c_k}};
  r.prefactor = a_k * lattice_factor * form_factor * in.c_k;
  r.additive = Interval(0);
  r.simplified = ipow(bound_det(in), k + 1) * ipow(in.h_b, k) * in.c_k;
  finish(r, eps);
  return r;
}

Interval e_alpha(const BoundInputs& in, const SublatticeInputs& sub) {
  const long sd = in.s * in.d;
  const auto m = static_cast<long>(sub.indices.size());
  const Interval det = bound_det(in);
  std::vector<Interval> d;
  for (const auto& idx : sub.indices) d.push_back(Interval(Rational(idx)) * det);
  Interval total(1);
  for (const auto& x : d) total *= x;
  Interval sum(0);
  for (long i = 0; i < m; ++i) {
    Interval prod(1);
    for (long j = 0; j < m; ++j) {
      if (j != i) prod *= d[static_cast<std::size_t>(j)];
    }
    sum += prod;
  }
  sum -= Interval(Rational(m - 1));
  return pow2_half(in.s * in.r1 - 1) * ipow(sub.h_alpha, sd - 1) * abs_disc_power(in, in.s, 2) * sum +
         root(total, static_cast<unsigned long>(sd), 128);
}

BoundReport bound_theorem2(const BoundInputs& in, const SublatticeInputs& sub, const Rational& eps) {
  validate(in, eps);
  require(!sub.indices.empty(), Errc::Validation, "no sublattices");
  BoundReport r;
  r.ell = in.ell;
  r.kappa = kappa(in.t, in.ell);
  const long k = r.kappa;
  const auto m = static_cast<long>(sub.indices.size());
  const Interval wd(Rational(in.w * in.d));
  // 2^(l t (l-1) + kappa/2 + s m r2) (wd)^(3 kappa / 2)
  const Interval b_k = pow2_half(2 * (in.ell * in.t * (in.ell - 1) + in.s * m * in.r2) + k) * common_factor(in) *
                       pow(wd, make_rational(3 * k, 2), 128);
  const Interval e = e_alpha(in, sub);
  const Interval det = bound_det(in);
  Interval big_d(1);
  for (const auto& idx : sub.indices) big_d *= Interval(Rational(idx)) * det;
  const Interval height_factor = ipow(sub.h_alpha * sub.h_alpha_inv * in.h_b * e, k);
  const Interval disc_factor = big_d / abs_disc_power(in, in.s * m, 2);
  r.items = {{"b_K", b_k},
             {"E_alpha", e},
             {"(h(alpha) h(1/alpha) h(B) E_alpha)^kappa", height_factor},
             {"D / |D_K(M)|^(sm/2)", disc_factor}};
  r.prefactor = b_k * height_factor * disc_factor * e;
  r.additive = e;
  Interval sum(0);
  for (long i = 0; i < m; ++i) {
    Interval prod(1);
    for (long j = 0; j < m; ++j) {
      if (j != i) prod *= Interval(Rational(sub.indices[static_cast<std::size_t>(j)])) * det;
    }
    sum += prod;
  }
  const Interval det_power = k - m + 1 >= 0 ? ipow(det, k - m + 1) : Interval(1) / ipow(det, m - 1 - k);
  r.simplified = ipow(sum, k + 2) * det_power * ipow(in.h_b, k) * in.c_k;
  finish(r, eps);
  return r;
}

Interval theta_height_bound_grid(const BoundInputs& in, unsigned long m_s, const Interval& h_alpha,
                                 const Interval& h_alpha_inv, const Interval& det) {
  const long sd = in.s * in.d;
  return pow2_half(sd) * Interval(Rational(sd * static_cast<long>(m_s))) * wd_three_halves(in) *
         ipow(h_alpha, sd) * h_alpha_inv * det * in.h_b;
}

Interval theta_height_bound_sublattice(const BoundInputs& in, const Interval& h_alpha, const Interval& h_alpha_inv,
                                       const Interval& y_bound) {
  return wd_three_halves(in) * sqrt(Interval(2), 128) * h_alpha * h_alpha_inv * in.h_b * y_bound;
}

}  // namespace kronav

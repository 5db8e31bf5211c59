#include "kronav/exactnum/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

#include "kronav/error.hpp"

namespace kronav {

ComplexInterval& ComplexInterval::operator+=(const ComplexInterval& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexInterval& ComplexInterval::operator*=(const ComplexInterval& o) {
  Interval r = re * o.re - im * o.im;
  Interval i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexInterval to_box(const RootDisc& disc) {
  return {Interval(disc.re - disc.radius, disc.re + disc.radius),
          Interval(disc.im - disc.radius, disc.im + disc.radius)};
}

Interval modulus(const ComplexInterval& z, long bits) {
  return sqrt(square(z.re) + square(z.im), bits);
}

Interval modulus(const RootDisc& disc, long bits) {
  const Interval center = sqrt(Interval(disc.re * disc.re + disc.im * disc.im), bits);
  Rational lo = center.lo() - disc.radius;
  if (lo < 0) lo = 0;
  return {lo, center.hi() + disc.radius};
}

namespace {

using ComplexD = std::complex<double>;

struct ComplexF {
  mpf_class re;
  mpf_class im;
};

struct ComplexQ {
  Rational re;
  Rational im;
};

ComplexQ mul(const ComplexQ& a, const ComplexQ& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Rational norm2(const ComplexQ& a) { return a.re * a.re + a.im * a.im; }

// ---- double-precision Aberth seed ------------------------------------------

std::optional<std::vector<ComplexD>> aberth_double(const IntPoly& f) {
  const int n = f.degree();
  std::vector<double> c;
  for (const auto& x : f.coeffs()) {
    const double v = x.get_d();
    if (!std::isfinite(v) || std::abs(v) > 1e250) return std::nullopt;
    c.push_back(v);
  }
  double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(i)] / c.back()));
  const double radius = 1.0 + bound;
  std::vector<ComplexD> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2 * std::numbers::pi * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = std::polar(radius * 0.5 + 0.1, angle);
  }
  auto eval = [&](ComplexD x, ComplexD& p, ComplexD& dp) {
    p = 0;
    dp = 0;
    for (int i = n; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + c[static_cast<std::size_t>(i)];
    }
  };
  for (int iter = 0; iter < 600; ++iter) {
    double worst = 0;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      ComplexD p, dp;
      eval(zk, p, dp);
      if (p == ComplexD(0)) continue;
      const ComplexD ratio = p / dp;
      ComplexD sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
      }
      const ComplexD w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::nullopt;
      zk -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(zk)));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

// ---- GMP-float Aberth refinement ------------------------------------------

class AberthF {
 public:
  AberthF(const IntPoly& f, unsigned long prec) : prec_(prec) {
    for (const auto& x : f.coeffs()) coeffs_.emplace_back(x, prec_);
  }

  mpf_class zero() const { return mpf_class(0, prec_); }

  void eval(const ComplexF& x, ComplexF& p, ComplexF& dp) const {
    p = {zero(), zero()};
    dp = {zero(), zero()};
    mpf_class t(0, prec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      // dp = dp*x + p
      t = dp.re * x.re - dp.im * x.im + p.re;
      dp.im = dp.re * x.im + dp.im * x.re + p.im;
      dp.re = t;
      // p = p*x + c
      t = p.re * x.re - p.im * x.im + *it;
      p.im = p.re * x.im + p.im * x.re;
      p.re = t;
    }
  }

  ComplexF div(const ComplexF& a, const ComplexF& b) const {
    mpf_class den(b.re * b.re + b.im * b.im, prec_);
    ComplexF out{zero(), zero()};
    out.re = (a.re * b.re + a.im * b.im) / den;
    out.im = (a.im * b.re - a.re * b.im) / den;
    return out;
  }

  ComplexF mul(const ComplexF& a, const ComplexF& b) const {
    ComplexF out{zero(), zero()};
    out.re = a.re * b.re - a.im * b.im;
    out.im = a.re * b.im + a.im * b.re;
    return out;
  }

  // Returns false if a division by zero was hit.
  bool run(std::vector<ComplexF>& z, int max_iter) const {
    const std::size_t n = z.size();
    mpf_class tol(1, prec_);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec_ > 16 ? prec_ - 12 : 4);
    for (int iter = 0; iter < max_iter; ++iter) {
      mpf_class worst(0, prec_);
      for (std::size_t k = 0; k < n; ++k) {
        ComplexF p, dp;
        eval(z[k], p, dp);
        if (sgn(p.re) == 0 && sgn(p.im) == 0) continue;
        if (sgn(dp.re) == 0 && sgn(dp.im) == 0) return false;
        ComplexF ratio = div(p, dp);
        ComplexF sum{zero(), zero()};
        for (std::size_t j = 0; j < n; ++j) {
          if (j == k) continue;
          ComplexF d{mpf_class(z[k].re - z[j].re, prec_), mpf_class(z[k].im - z[j].im, prec_)};
          if (sgn(d.re) == 0 && sgn(d.im) == 0) return false;
          ComplexF inv = div(ComplexF{mpf_class(1, prec_), zero()}, d);
          sum.re += inv.re;
          sum.im += inv.im;
        }
        ComplexF rs = mul(ratio, sum);
        ComplexF den{mpf_class(1 - rs.re, prec_), mpf_class(-rs.im, prec_)};
        if (sgn(den.re) == 0 && sgn(den.im) == 0) return false;
        ComplexF w = div(ratio, den);
        z[k].re -= w.re;
        z[k].im -= w.im;
        mpf_class wmag(abs(w.re) + abs(w.im), prec_);
        mpf_class zmag(abs(z[k].re) + abs(z[k].im), prec_);
        if (zmag < 1) zmag = 1;
        mpf_class rel(wmag / zmag, prec_);
        if (rel > worst) worst = rel;
      }
      if (worst < tol) return true;
    }
    return true;
  }

 private:
  unsigned long prec_;
  std::vector<mpf_class> coeffs_;
};

Rational to_rational(const mpf_class& x) {
  Rational out;
  mpq_set_f(out.get_mpq_t(), x.get_mpf_t());
  return out;
}

// Gerschgorin certification; returns nullopt when discs overlap or exceed the target radius.
std::optional<std::vector<RootDisc>> certify(const IntPoly& f, const std::vector<ComplexQ>& z, long bits) {
  const std::size_t n = z.size();
  const Rational lc2 = Rational(f.leading() * f.leading());
  std::vector<Rational> radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexQ p{Rational(0), Rational(0)};
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
      p = mul(p, z[i]);
      p.re += Rational(*it);
    }
    Rational denom = lc2;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rational d2 = norm2({z[i].re - z[j].re, z[i].im - z[j].im});
      if (d2 == 0) return std::nullopt;
      denom *= d2;
    }
    const Rational w2 = norm2(p) / denom;
    const Rational r = sqrt(Interval(w2), 64).hi() * static_cast<long>(n);
    radius[i] = r;
    Rational scale = norm2(z[i]);
    if (scale < 1) scale = 1;
    Rational target = scale;
    mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(2 * bits));
    if (r * r > target) return std::nullopt;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational d2 = norm2({z[i].re - z[j].re, z[i].im - z[j].im});
      const Rational s = radius[i] + radius[j];
      if (!(d2 > s * s)) return std::nullopt;
    }
  }
  std::vector<RootDisc> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({z[i].re, z[i].im, radius[i]});
  return out;
}

}  // namespace

std::vector<RootDisc> isolate_complex_roots(const IntPoly& f, long bits) {
  require(f.degree() >= 1, Errc::PreconditionViolation, "root isolation of a constant polynomial");
  if (f.degree() == 1) {
    return {RootDisc{make_rational(-f.coeff(0), f.coeff(1)), Rational(0), Rational(0)}};
  }
  require(is_squarefree(f), Errc::PreconditionViolation, "root isolation needs a squarefree polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());

  unsigned long prec = 128;
  while (static_cast<long>(prec) < bits + 64) prec *= 2;
  std::vector<ComplexF> z;
  if (auto seed = aberth_double(f)) {
    for (const auto& s : *seed) z.push_back({mpf_class(s.real(), prec), mpf_class(s.imag(), prec)});
  } else {
    // Circle start: |roots| <= 1 + max |c_i / c_n|.
    Rational bound = 0;
    for (int i = 0; i < f.degree(); ++i) {
      Rational r = abs(Rational(f.coeff(static_cast<std::size_t>(i)), f.leading()));
      if (r > bound) bound = r;
    }
    const double radius = std::min(1e300, Rational(bound + 1).get_d());
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
      z.push_back({mpf_class(radius * std::cos(angle), prec), mpf_class(radius * std::sin(angle), prec)});
    }
  }

  constexpr unsigned long kPrecisionCap = 1UL << 15;
  int iterations = 60;
  while (prec <= kPrecisionCap) {
    for (auto& zk : z) {
      zk.re.set_prec(prec);
      zk.im.set_prec(prec);
    }
    AberthF solver(f, prec);
    solver.run(z, iterations);
    std::vector<ComplexQ> zq;
    zq.reserve(n);
    for (const auto& zk : z) zq.push_back({to_rational(zk.re), to_rational(zk.im)});
    if (auto discs = certify(f, zq, bits)) {
      std::sort(discs->begin(), discs->end(), [](const RootDisc& a, const RootDisc& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
      });
      return *discs;
    }
    prec *= 2;
    iterations = 200;
  }
  fail(Errc::PrecisionCap, "complex root isolation did not certify within the precision cap");
}

}  // namespace kronav

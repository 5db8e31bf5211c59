#include "kronav/exactnum/irreducible.hpp"

#include <algorithm>
#include <functional>

#include "kronav/error.hpp"
#include "kronav/exactnum/complex_roots.hpp"

namespace kronav {

namespace {

enum class Verdict { Irreducible, Reducible, Inconclusive };

bool contains_integer(const Interval& x) { return floor(x.hi()) >= ceil(x.lo()); }

bool unique_integer(const Interval& x, Integer* value) {
  const Integer lo = ceil(x.lo());
  if (floor(x.hi()) != lo) return false;
  *value = lo;
  return true;
}

Verdict search_factors(const IntPoly& f, const std::vector<RootDisc>& discs) {
  const std::size_t n = discs.size();
  std::vector<ComplexInterval> boxes;
  for (const auto& d : discs) boxes.push_back(to_box(d));
  bool inconclusive = false;

  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t)> visit = [&](std::size_t start, std::size_t size) -> bool {
    if (pick.size() == size) {
      ComplexInterval trace(Rational(0));
      for (auto i : pick) trace += boxes[i];
      if (!trace.im.contains_zero() || !contains_integer(trace.re)) return false;
      // coefficients of prod (x - z_i), constant term first
      std::vector<ComplexInterval> c{ComplexInterval(Rational(1))};
      for (auto i : pick) {
        std::vector<ComplexInterval> next(c.size() + 1, ComplexInterval(Rational(0)));
        const ComplexInterval neg{-boxes[i].re, -boxes[i].im};
        for (std::size_t k = 0; k < c.size(); ++k) {
          next[k + 1] += c[k];
          next[k] += c[k] * neg;
        }
        c = std::move(next);
      }
      std::vector<Integer> coeffs;
      for (const auto& ck : c) {
        if (!ck.im.contains_zero() || !contains_integer(ck.re)) return false;
        Integer v;
        if (!unique_integer(ck.re, &v)) {
          inconclusive = true;
          return false;
        }
        coeffs.push_back(v);
      }
      if (divides_exactly(IntPoly(coeffs), f, nullptr)) return true;
      inconclusive = true;
      return false;
    }
    for (std::size_t i = start; i + (size - pick.size()) <= n; ++i) {
      pick.push_back(i);
      const bool found = visit(i + 1, size);
      pick.pop_back();
      if (found) return true;
    }
    return false;
  };

  for (std::size_t size = 1; size <= n / 2; ++size) {
    if (visit(0, size)) return Verdict::Reducible;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::Irreducible;
}

}  // namespace

bool is_irreducible(const IntPoly& f0) {
  require(f0.degree() >= 1, Errc::PreconditionViolation, "irreducibility of a constant polynomial");
  const IntPoly f = primitive_part(f0);
  const int n = f.degree();
  if (n == 1) return true;
  if (!is_squarefree(f)) return false;
  // a^(n-1) f(x/a) is monic with integer coefficients and factors like f.
  const Integer a = f.leading();
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)] =
        i == n ? Integer(1) : Integer(f.coeff(static_cast<std::size_t>(i)) * pow(a, static_cast<unsigned long>(n - 1 - i)));
  }
  const IntPoly monic(c);
  for (long bits = 64 + 4L * n; bits <= (1L << 14); bits *= 2) {
    switch (search_factors(monic, isolate_complex_roots(monic, bits))) {
      case Verdict::Irreducible:
        return true;
      case Verdict::Reducible:
        return false;
      case Verdict::Inconclusive:
        break;
    }
  }
  fail(Errc::PrecisionCap, "irreducibility test did not resolve within the precision cap");
}

}  // namespace kronav

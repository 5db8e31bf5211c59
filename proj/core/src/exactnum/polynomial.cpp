#include "kronav/exactnum/polynomial.hpp"

#include "kronav/error.hpp"

namespace kronav {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& x : p.coeffs()) g = gcd(g, x);
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c;
  for (const auto& x : p.coeffs()) c.push_back(x / g);
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  Integer den = 1;
  for (const auto& x : p.coeffs()) den = lcm(den, x.get_den());
  std::vector<Integer> c;
  for (const auto& x : p.coeffs()) {
    Rational scaled = x * den;
    c.push_back(scaled.get_num());
  }
  return primitive_part(IntPoly(std::move(c)));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  require(!b.is_zero(), Errc::PreconditionViolation, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const auto& bc = b.coeffs();
  const Rational& lead = b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Rational q = rem[static_cast<std::size_t>(i + b.degree())] / lead;
    quo[static_cast<std::size_t>(i)] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= q * bc[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;
}

std::pair<RatPoly, RatPoly> half_extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0(std::vector<Rational>{Rational(1)}), s1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {r0, s0};
  const Rational inv = Rational(1) / r0.leading();
  return {inv * r0, inv * s0};
}

bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) return false;
  for (const auto& x : q.coeffs()) {
    if (x.get_den() != 1) return false;
  }
  if (quotient != nullptr) {
    std::vector<Integer> c;
    for (const auto& x : q.coeffs()) c.push_back(x.get_num());
    *quotient = IntPoly(std::move(c));
  }
  return true;
}

bool is_squarefree(const IntPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(to_rational(p), to_rational(p.derivative())).degree() == 0;
}

namespace {

int sign_variations(const std::vector<RatPoly>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    const Rational v = p.eval(x);
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int count_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi) {
  require(lo <= hi, Errc::PreconditionViolation, "count_real_roots on an empty range");
  std::vector<RatPoly> seq{to_rational(p), to_rational(p.derivative())};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

std::string to_string(const IntPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i != 0) out += ", ";
    out += p.coeffs()[i].get_str();
  }
  return out + "]";
}

}  // namespace kronav

#include "kronav/exactnum/field.hpp"

#include <sstream>

#include "kronav/error.hpp"
#include "kronav/exactnum/irreducible.hpp"
#include "kronav/exactnum/linalg.hpp"

namespace kronav {

namespace {

int rational_sign_at(const IntPoly& f, const Rational& x) { return sgn(f.eval(x)); }

long level_bits(std::size_t level) { return 32L << level; }

}  // namespace

NumberField::NumberField(IntPoly minpoly, Interval isolating)
    : minpoly_(std::move(minpoly)), isolating_(std::move(isolating)) {
  const std::size_t n = static_cast<std::size_t>(minpoly_.degree());
  std::vector<Rational> v(n, Rational(0));
  v[0] = 1;
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
    powers_.push_back(v);
    // multiply by gamma and reduce with gamma^n = -sum c_i gamma^i
    Rational top = v[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < n; ++i) v[i] -= top * Rational(minpoly_.coeff(i));
    }
  }
}

FieldPtr NumberField::create(const IntPoly& minpoly, const Rational& lo, const Rational& hi) {
  const int n = minpoly.degree();
  require(n >= 1 && n <= kMaxDegree, Errc::Validation,
          "field minimal polynomial must have degree between 1 and 16");
  require(minpoly.leading() == 1, Errc::Validation, "field minimal polynomial must be monic");
  require(lo <= hi, Errc::EmptyOrAmbiguousRootInterval, "root interval has lo > hi");
  require(is_irreducible(minpoly), Errc::ReducibleMinPoly,
          "minimal polynomial " + to_string(minpoly) + " is reducible over Q");
  Interval isolating(lo, hi);
  if (n == 1) {
    const Rational r(-minpoly.coeff(0));
    require(isolating.contains(r), Errc::EmptyOrAmbiguousRootInterval, "root interval misses the rational root");
    isolating = Interval(r);
  } else {
    const int count = count_real_roots(minpoly, lo, hi);
    require(count == 1, Errc::EmptyOrAmbiguousRootInterval,
            "root interval contains " + std::to_string(count) + " real roots, expected exactly one");
  }
  return FieldPtr(new NumberField(minpoly, isolating));
}

Interval NumberField::refine(const Interval& from, long bits) const {
  Rational a = from.lo();
  Rational b = from.hi();
  int sa = rational_sign_at(minpoly_, a);
  Rational target = 1;
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  const IntPoly df = minpoly_.derivative();
  while (b - a > target) {
    // Newton step from the midpoint, verified by a sign change inside [a, b].
    const Rational m = (a + b) / 2;
    const Rational dm = df.eval(m);
    if (dm != 0) {
      const Rational x = dyadic_floor(m - minpoly_.eval(m) / dm, bits + 2);
      const Rational half = target / 4;
      Rational lo = x - half;
      Rational hi = x + half;
      if (lo < a) lo = a;
      if (hi > b) hi = b;
      if (lo < hi) {
        const int slo = rational_sign_at(minpoly_, lo);
        const int shi = rational_sign_at(minpoly_, hi);
        if (slo != 0 && shi != 0 && slo != shi) {
          a = lo;
          b = hi;
          sa = slo;
          continue;
        }
        // The step landed close; use it to tighten one side.
        if (lo > a && slo == sa) {
          a = lo;
        } else if (hi < b && shi != sa && shi != 0) {
          b = hi;
        }
      }
    }
    for (int step = 0; step < 4 && b - a > target; ++step) {
      const Rational mid = (a + b) / 2;
      const int sm = rational_sign_at(minpoly_, mid);
      if (sm == sa) {
        a = mid;
      } else {
        b = mid;
      }
    }
  }
  return {a, b};
}

Interval NumberField::generator_enclosure(long bits) const {
  if (degree() == 1) return isolating_;
  std::lock_guard<std::mutex> lock(mutex_);
  std::size_t level = 0;
  while (level_bits(level) < bits) ++level;
  while (levels_.size() <= level) {
    const Interval& from = levels_.empty() ? isolating_ : levels_.back();
    levels_.push_back(refine(from, level_bits(levels_.size())));
  }
  return levels_[level];
}

std::vector<RootDisc> NumberField::conjugate_discs(long bits) const {
  if (degree() == 1) return {RootDisc{isolating_.lo(), Rational(0), Rational(0)}};
  long key = 32;
  while (key < bits) key *= 2;
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = discs_.find(key);
  if (it == discs_.end()) it = discs_.emplace(key, isolate_complex_roots(minpoly_, key)).first;
  return it->second;
}

const std::vector<Rational>& NumberField::power_coords(std::size_t k) const { return powers_.at(k); }

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  require(field_ != nullptr, Errc::Internal, "field element without field");
  require(coords_.size() == static_cast<std::size_t>(field_->degree()), Errc::Validation,
          "field element must have exactly " + std::to_string(field_->degree()) + " coordinates");
}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : field_(std::move(field)) {
  require(field_ != nullptr, Errc::Internal, "field element without field");
  coords_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  coords_[0] = value;
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (field->degree() == 1) return FieldElement(field, field->root_interval().lo());
  FieldElement g(field, Rational(0));
  g.coords_[1] = 1;
  return g;
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

Rational FieldElement::rational_value() const {
  require(is_rational(), Errc::Internal, "rational_value of an irrational element");
  return coords_.at(0);
}

void FieldElement::check_same_field(const FieldElement& o) const {
  require(field_ != nullptr && field_ == o.field_, Errc::Internal, "field elements from different fields");
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  const std::size_t n = coords_.size();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coords_[j] != 0) prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = n; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& pk = field_->power_coords(k);
    for (std::size_t i = 0; i < n; ++i) out[i] += prod[k] * pk[i];
  }
  coords_ = std::move(out);
  return *this;
}

FieldElement FieldElement::inverse() const {
  require(!is_zero(), Errc::PreconditionViolation, "inverse of zero");
  if (is_rational()) return FieldElement(field_, Rational(1) / coords_[0]);
  const RatPoly a{std::vector<Rational>(coords_)};
  const RatPoly m = to_rational(field_->minpoly());
  auto [g, s] = half_extended_gcd(a, m);
  require(g.degree() == 0, Errc::Internal, "non-unit gcd with an irreducible minimal polynomial");
  s = divmod(s, m).second;
  std::vector<Rational> c(coords_.size(), Rational(0));
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) c[i] = s.coeffs()[i] / g.leading();
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result(field_, Rational(1));
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

Interval evaluate(const FieldElement& x, long bits) {
  if (x.is_rational()) return Interval(x.coords()[0]);
  Rational tol = 1;
  mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), static_cast<mp_bitcnt_t>(bits + 1));
  for (long gbits = 32;; gbits *= 2) {
    const Interval g = x.field()->generator_enclosure(gbits);
    Interval acc(0);
    for (auto it = x.coords().rbegin(); it != x.coords().rend(); ++it) {
      acc = acc * g;
      acc += Interval(*it);
    }
    Rational lower_mag = 1;
    if (acc.lo() > 1) lower_mag = acc.lo();
    if (acc.hi() < -1) lower_mag = -acc.hi();
    if (acc.width() <= tol * lower_mag) return acc.snapped(bits + 2);
  }
}

int sign(const FieldElement& x) {
  if (x.is_zero()) return 0;
  for (long bits = 16;; bits *= 2) {
    if (auto s = evaluate(x, bits).certified_sign()) return *s;
  }
}

int compare(const FieldElement& a, const FieldElement& b) { return sign(a - b); }

FieldElement abs(const FieldElement& x) { return sign(x) < 0 ? -x : x; }

std::vector<ComplexInterval> conjugates(const FieldElement& x, long bits) {
  std::vector<ComplexInterval> out;
  for (const auto& disc : x.field()->conjugate_discs(bits + 16)) {
    const ComplexInterval g = to_box(disc);
    ComplexInterval acc(Rational(0));
    for (auto it = x.coords().rbegin(); it != x.coords().rend(); ++it) {
      acc = acc * g;
      acc += ComplexInterval(*it);
    }
    out.push_back(acc);
  }
  return out;
}

IntPoly minimal_polynomial(const FieldElement& x) {
  if (x.is_zero()) return IntPoly({Integer(0), Integer(1)});
  if (x.is_rational()) {
    const Rational q = x.coords()[0];
    return primitive_part(RatPoly({-q, Rational(1)}));
  }
  const std::size_t n = x.coords().size();
  std::vector<std::vector<Rational>> powers{FieldElement(x.field(), Rational(1)).coords()};
  FieldElement p = FieldElement(x.field(), Rational(1));
  for (std::size_t k = 1; k <= n; ++k) {
    p *= x;
    powers.push_back(p.coords());
    const auto ker = kernel(Matrix<Rational>::from_columns(powers));
    if (!ker.empty()) return primitive_part(RatPoly(ker.front()));
  }
  fail(Errc::Internal, "no linear relation among powers of a field element");
}

std::string to_string(const FieldElement& x) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (i) out << ", ";
    out << to_string(x.coords()[i]);
  }
  out << ']';
  return out.str();
}

}  // namespace kronav

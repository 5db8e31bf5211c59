#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kronav/exactnum/complex_roots.hpp"
#include "kronav/exactnum/interval.hpp"
#include "kronav/exactnum/polynomial.hpp"

namespace kronav {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Real number field E = Q(gamma), gamma the unique root of a monic
/// irreducible integer polynomial inside a given rational interval.
///
/// Enclosures of gamma and of all its complex conjugates are refined on
/// demand and cached; the cache is guarded, so a field may be shared
/// between threads.
class NumberField {
 public:
  static constexpr int kMaxDegree = 16;

  /// Validates the descriptor: monic, degree in [1, 16], irreducible over Q,
  /// and exactly one real root in [lo, hi].
  static FieldPtr create(const IntPoly& minpoly, const Rational& lo, const Rational& hi);

  int degree() const { return minpoly_.degree(); }
  const IntPoly& minpoly() const { return minpoly_; }
  const Interval& root_interval() const { return isolating_; }

  /// Enclosure of gamma with width at most 2^-bits.
  Interval generator_enclosure(long bits) const;
  /// Certified discs around all complex roots of the minimal polynomial;
  /// index 0..degree-1. Radii at most 2^-bits * max(1, |root|).
  std::vector<RootDisc> conjugate_discs(long bits) const;
  /// Coordinates of gamma^k reduced modulo the minimal polynomial.
  const std::vector<Rational>& power_coords(std::size_t k) const;

  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;

 private:
  NumberField(IntPoly minpoly, Interval isolating);

  Interval refine(const Interval& from, long bits) const;

  IntPoly minpoly_;
  Interval isolating_;
  std::vector<std::vector<Rational>> powers_;
  mutable std::mutex mutex_;
  mutable std::vector<Interval> levels_;
  mutable std::map<long, std::vector<RootDisc>> discs_;
};

/// Exact element of E in the power basis 1, gamma, ..., gamma^(l-1).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rational> coords);
  FieldElement(FieldPtr field, const Rational& value);

  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;

  FieldElement inverse() const;
  FieldElement pow(long exponent) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }
  FieldElement& operator*=(const Rational& s);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& s) { return a *= s; }
  friend FieldElement operator*(const Rational& s, FieldElement a) { return a *= s; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void check_same_field(const FieldElement& o) const;

  FieldPtr field_;
  std::vector<Rational> coords_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement zero_like(const FieldElement& x) { return FieldElement(x.field(), Rational(0)); }
inline FieldElement one_like(const FieldElement& x) { return FieldElement(x.field(), Rational(1)); }

/// Enclosure of the real value of x, width <= 2^-bits * max(1, |x|).
/// Rational elements are returned as exact point intervals. Raising bits
/// never enlarges the returned interval.
Interval evaluate(const FieldElement& x, long bits);
/// Exact sign; refines until the enclosure excludes zero.
int sign(const FieldElement& x);
int compare(const FieldElement& a, const FieldElement& b);
FieldElement abs(const FieldElement& x);

/// Images of x under all complex embeddings of E, in conjugate_discs order.
std::vector<ComplexInterval> conjugates(const FieldElement& x, long bits);

/// Minimal polynomial over Q as a primitive integer polynomial with positive
/// leading coefficient. The zero element yields the polynomial x.
IntPoly minimal_polynomial(const FieldElement& x);

/// Coordinates as a "[c0, c1, ...]" string, for diagnostics.
std::string to_string(const FieldElement& x);

}  // namespace kronav

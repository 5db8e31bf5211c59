#pragma once

#include <initializer_list>
#include <ostream>
#include <vector>

#include "kronav/exactnum/field.hpp"
#include "kronav/fieldlat/module.hpp"
#include "kronav/fieldlat/subfield.hpp"

namespace kronav {

inline void PrintTo(const FieldElement& x, std::ostream* os) { *os << to_string(x); }

}  // namespace kronav

namespace kronav::testing {

inline IntPoly poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

inline Rational q(const char* s) { return parse_rational(s); }

inline KElement kel(std::initializer_list<const char*> coords) {
  KElement out;
  for (const char* c : coords) out.push_back(parse_rational(c));
  return out;
}

inline FieldPtr rational_field() { return NumberField::create(poly({0, 1}), 0, 0); }
inline FieldPtr sqrt2_field() { return NumberField::create(poly({-2, 0, 1}), 1, 2); }
inline FieldPtr sqrt5_field() { return NumberField::create(poly({-5, 0, 1}), 2, 3); }
// gamma = sqrt(2) + sqrt(3)
inline FieldPtr sqrt2_sqrt3_field() { return NumberField::create(poly({1, 0, -10, 0, 1}), 3, q("16/5")); }

inline FieldElement sqrt2_in(const FieldPtr& e) {
  const FieldElement g = FieldElement::generator(e);
  return (g.pow(3) - Rational(9) * g) * q("1/2");
}

inline FieldElement sqrt3_in(const FieldPtr& e) {
  const FieldElement g = FieldElement::generator(e);
  return (Rational(11) * g - g.pow(3)) * q("1/2");
}

inline SubfieldK k_rationals(const FieldPtr& e) {
  return SubfieldK::create(e, {poly({0, 1}), {FieldElement(e, Rational(0))}, {}, {{Rational(1)}}, Integer(1)});
}

inline SubfieldK k_sqrt2(const FieldPtr& e, const FieldElement& root2) {
  return SubfieldK::create(e, {poly({-2, 0, 1}), {root2, -root2}, {}, {{1, 0}, {0, 1}}, Integer(8)});
}

inline SubfieldK k_sqrt5(const FieldPtr& e) {
  const FieldElement g = FieldElement::generator(e);
  return SubfieldK::create(e, {poly({-5, 0, 1}), {g, -g}, {}, {{1, 0}, {q("1/2"), q("1/2")}}, Integer(5)});
}

inline SubfieldK k_gaussian(const FieldPtr& e) {
  return SubfieldK::create(
      e, {poly({1, 0, 1}), {}, {{FieldElement(e, Rational(0)), FieldElement(e, Rational(1))}}, {{1, 0}, {0, 1}}, Integer(-4)});
}

/// M = O_K^w with the standard pseudo-basis (O_K, e_j).
inline ModuleM free_module(const SubfieldK& k, int w) {
  const auto d = static_cast<std::size_t>(k.d());
  std::vector<PseudoBasisEntry> pb;
  for (int j = 0; j < w; ++j) {
    PseudoBasisEntry entry;
    for (std::size_t i = 0; i < d; ++i) {
      KElement e(d, Rational(0));
      e[i] = 1;
      entry.ideal.push_back(e);
    }
    for (int c = 0; c < w; ++c) entry.y.push_back(c == j ? k.one() : KElement(d, Rational(0)));
    pb.push_back(std::move(entry));
  }
  return ModuleM::create(k, w, std::move(pb));
}

}  // namespace kronav::testing

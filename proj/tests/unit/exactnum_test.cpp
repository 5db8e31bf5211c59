#include <gtest/gtest.h>

#include <random>

#include "kronav/error.hpp"
#include "kronav/exactnum/field.hpp"
#include "kronav/exactnum/height.hpp"
#include "kronav/exactnum/irreducible.hpp"
#include "kronav/exactnum/linalg.hpp"

namespace kronav {
namespace {

IntPoly P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

Rational Q(const char* s) { return parse_rational(s); }

FieldPtr sqrt2_field() { return NumberField::create(P({-2, 0, 1}), 1, 2); }
FieldPtr sqrt2_sqrt3_field() { return NumberField::create(P({1, 0, -10, 0, 1}), 3, Q("16/5")); }

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(to_string(Q("6/4")), "3/2");
  EXPECT_EQ(to_string(Q("-7")), "-7");
  EXPECT_THROW(Q("0.5"), Error);
  EXPECT_THROW(Q("1/0"), Error);
  EXPECT_EQ(round_nearest(Q("5/2")), 3);
  EXPECT_EQ(round_nearest(Q("-5/2")), -2);
}

TEST(Interval, SqrtAndRootEnclose) {
  const Interval s = sqrt(Interval(2), 80);
  EXPECT_LT(s.lo() * s.lo(), 2);
  EXPECT_GT(s.hi() * s.hi(), 2);
  EXPECT_LT(s.width(), Q("1/1000000000000000000"));
  const Interval c = root(Interval(27), 3, 60);
  EXPECT_TRUE(c.contains(3));
  const Interval p = pow(Interval(Q("1/4")), Q("-1/2"), 60);
  EXPECT_TRUE(p.contains(2));
}

TEST(Polynomial, DivisionGcdAndSturm) {
  const IntPoly f = P({-1, 0, 1});
  EXPECT_EQ(count_real_roots(f, -2, 2), 2);
  EXPECT_EQ(count_real_roots(f, 0, 2), 1);
  EXPECT_FALSE(is_squarefree(f * f));
  IntPoly q;
  EXPECT_TRUE(divides_exactly(P({-1, 1}), f, &q));
  EXPECT_EQ(q, P({1, 1}));
  EXPECT_EQ(gcd(to_rational(f), to_rational(P({1, 1}))), to_rational(P({1, 1})));
}

TEST(Irreducible, KnownPolynomials) {
  EXPECT_TRUE(is_irreducible(P({-2, 0, 1})));
  EXPECT_FALSE(is_irreducible(P({-1, 0, 1})));
  EXPECT_TRUE(is_irreducible(P({1, 0, -10, 0, 1})));
  EXPECT_FALSE(is_irreducible(P({4, 0, 0, 0, 1})));  // (x^2+2x+2)(x^2-2x+2)
  EXPECT_FALSE(is_irreducible(P({6, 0, -5, 0, 1})));  // (x^2-2)(x^2-3)
  EXPECT_TRUE(is_irreducible(P({-2, 0, 0, 1})));
  EXPECT_TRUE(is_irreducible(P({-3, 0, 2})));
  EXPECT_TRUE(is_irreducible(P({1, 1, 1, 1, 1, 1, 1})));  // 7th cyclotomic
  EXPECT_FALSE(is_irreducible(P({-1, 0, 0, 0, 0, 0, 1})));
}

TEST(Irreducible, ProductsOfRandomFactorsAreReducible) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const IntPoly a = P({coef(rng), coef(rng), 1});
    const IntPoly b = P({coef(rng), coef(rng), coef(rng), 1});
    const IntPoly f = a * b;
    if (!is_squarefree(f)) continue;
    EXPECT_FALSE(is_irreducible(f)) << to_string(f);
  }
}

TEST(NumberField, Validation) {
  EXPECT_NO_THROW(sqrt2_field());
  try {
    NumberField::create(P({-1, 0, 1}), 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ReducibleMinPoly);
  }
  try {
    NumberField::create(P({-2, 0, 1}), -2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyOrAmbiguousRootInterval);
  }
  EXPECT_NO_THROW(sqrt2_sqrt3_field());
}

TEST(FieldElement, ArithmeticAndInverse) {
  const auto E = sqrt2_sqrt3_field();
  const FieldElement g = FieldElement::generator(E);
  const FieldElement sqrt2 = (g.pow(3) - Rational(9) * g) * Q("1/2");
  const FieldElement sqrt3 = (Rational(11) * g - g.pow(3)) * Q("1/2");
  EXPECT_EQ(sqrt2 * sqrt2, FieldElement(E, Rational(2)));
  EXPECT_EQ(sqrt3 * sqrt3, FieldElement(E, Rational(3)));
  EXPECT_EQ(sqrt2 + sqrt3, g);
  EXPECT_EQ(g * g.inverse(), FieldElement(E, Rational(1)));
  EXPECT_EQ(sign(sqrt2 - Rational(1) * FieldElement(E, Rational(1))), 1);
}

TEST(FieldElement, EvaluateWidthAndNesting) {
  const auto E = sqrt2_field();
  const FieldElement g = FieldElement::generator(E);
  const Interval v = evaluate(g, 20);
  EXPECT_TRUE(v.contains(Q("141421356/100000000")) || v.overlaps(Interval(Q("1414213/1000000"), Q("1414214/1000000"))));
  EXPECT_LE(v.width(), Q("2/1048576"));
  for (long b = 4; b < 200; b += 13) EXPECT_TRUE(evaluate(g, b + 8).subset_of(evaluate(g, b)));
  EXPECT_EQ(evaluate(FieldElement(E, Q("3/4")), 10), Interval(Q("3/4")));
  EXPECT_EQ(evaluate(FieldElement(E, Rational(0)), 10), Interval(0));
  EXPECT_EQ(sign(g * g - FieldElement(E, Rational(2))), 0);
}

TEST(FieldElement, MinimalPolynomial) {
  const auto E = sqrt2_field();
  const FieldElement g = FieldElement::generator(E);
  EXPECT_EQ(minimal_polynomial(g), P({-2, 0, 1}));
  EXPECT_EQ(minimal_polynomial(FieldElement(E, Rational(3))), P({-3, 1}));
  EXPECT_EQ(minimal_polynomial(g + FieldElement(E, Rational(1))), P({-1, -2, 1}));
  const auto F = sqrt2_sqrt3_field();
  const FieldElement h = FieldElement::generator(F);
  const FieldElement sqrt2 = (h.pow(3) - Rational(9) * h) * Q("1/2");
  EXPECT_EQ(minimal_polynomial(sqrt2), P({-2, 0, 1}));
  EXPECT_EQ(minimal_polynomial(h), P({1, 0, -10, 0, 1}));
}

TEST(Height, KnownValues) {
  const auto E = sqrt2_field();
  EXPECT_EQ(weil_height(FieldElement(E, Rational(1))), Interval(1));
  EXPECT_EQ(weil_height(FieldElement(E, Q("1/2"))), Interval(2));
  const Interval h = weil_height(FieldElement::generator(E), 60);
  EXPECT_TRUE(h.contains(Q("14142135623/10000000000")) || h.width() < Q("1/1000000000"));
  EXPECT_TRUE((h * h).overlaps(Interval(2)));
  EXPECT_LT(h.width(), Q("1/1000000000000"));
}

TEST(Linalg, RankKernelInverse) {
  Matrix<Rational> m(2, 3, Rational(0));
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 6;
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(kernel(m).size(), 2u);
  Matrix<Rational> a(2, 2, Rational(0));
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  EXPECT_EQ(determinant(a), 1);
  const auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ((*inv)(0, 1), -1);
}

}  // namespace
}  // namespace kronav

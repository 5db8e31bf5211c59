#include <gtest/gtest.h>

#include <random>

#include "kronav/avoidance/avoid.hpp"
#include "kronav/error.hpp"
#include "kronav/fieldlat/module.hpp"
#include "support/fixtures.hpp"

namespace kronav {
namespace {

using namespace kronav::testing;

HomogeneousPoly hpoly(std::size_t n, std::initializer_list<std::pair<Exponents, long>> terms) {
  std::map<Exponents, Rational> m;
  for (const auto& [e, c] : terms) m[e] += Rational(c);
  return HomogeneousPoly::create(n, m);
}

EmbeddedLattice integer_lattice(const std::vector<std::vector<long>>& columns) {
  std::vector<std::vector<Rational>> cols;
  for (const auto& c : columns) cols.emplace_back(c.begin(), c.end());
  return EmbeddedLattice::from_rational_columns(rational_field(), cols);
}

EmbeddedLattice z2() { return integer_lattice({{1, 0}, {0, 1}}); }

Sublattice sub(const std::vector<std::vector<long>>& columns) {
  std::vector<std::vector<Integer>> cols;
  for (const auto& c : columns) cols.emplace_back(c.begin(), c.end());
  return Sublattice(IntMatrix::from_columns(cols));
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

AvoidWitness solve_grid(const PolySystemSet& s, const EmbeddedLattice& l) {
  const MinimaResult minima = successive_minima(l);
  const ProductPoly p = select_product_poly(s, l, minima);
  return grid_avoid(s, p, l, minima, Interval(1), l.covolume());
}

TEST(HomogeneousPoly, Validation) {
  EXPECT_THROW(hpoly(2, {{{1, 0}, 0}}), Error);
  EXPECT_THROW(hpoly(2, {{{0, 0}, 3}}), Error);
  EXPECT_THROW(hpoly(2, {{{1, 0}, 1}, {{1, 1}, 1}}), Error);
  EXPECT_THROW(hpoly(2, {{{1, 0, 0}, 1}}), Error);
  const HomogeneousPoly p = hpoly(2, {{{2, 0}, 1}, {{1, 1}, -3}, {{0, 2}, 0}});
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ(p.terms().size(), 2u);
}

TEST(HomogeneousPoly, ExactEvaluationInE) {
  const auto e = sqrt2_field();
  const FieldElement g = FieldElement::generator(e);
  const HomogeneousPoly p = hpoly(2, {{{2, 0}, 1}, {{0, 2}, -2}});
  EXPECT_TRUE(p.evaluate({g, FieldElement(e, Rational(1))}).is_zero());
  EXPECT_EQ(p.evaluate({FieldElement(e, Rational(3)), g}), FieldElement(e, Rational(5)));
}

TEST(PolySystemSet, DegreeSum) {
  const auto x1 = hpoly(2, {{{1, 0}, 1}});
  const auto q2 = hpoly(2, {{{2, 0}, 1}, {{0, 2}, 1}});
  EXPECT_EQ(PolySystemSet::create(2, {{x1}, {x1, q2}}, false).m_s(), 3u);
  EXPECT_EQ(PolySystemSet::create(2, {{x1}, {x1, q2}}, true).m_s(), 1u);
  EXPECT_EQ(PolySystemSet::create(2, {}, true).m_s(), 1u);
  EXPECT_THROW(PolySystemSet::create(2, {}, false), Error);
  EXPECT_THROW(PolySystemSet::create(3, {{x1}}, false), Error);
}

TEST(Grid, OrderOnUnitSquare) {
  const auto g = avoidance_grid(2, 1);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], ints({1, 0}));
  EXPECT_EQ(g[1], ints({0, 1}));
  EXPECT_EQ(g[2], ints({1, 1}));
  const auto g2 = avoidance_grid(2, 2);
  EXPECT_EQ(g2.size(), 8u);
  EXPECT_EQ(g2[3], ints({2, 0}));
  EXPECT_EQ(g2.back(), ints({2, 2}));
}

TEST(SelectProductPoly, Examples) {
  const auto l = z2();
  const auto minima = successive_minima(l);
  const auto x1 = hpoly(2, {{{1, 0}, 1}});
  const auto sum = hpoly(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  const auto q2 = hpoly(2, {{{2, 0}, 1}, {{0, 2}, 1}});

  auto p = select_product_poly(PolySystemSet::create(2, {{x1}}, false), l, minima);
  EXPECT_EQ(p.chosen, std::vector<std::size_t>{0});
  EXPECT_EQ(p.degree, 1u);

  p = select_product_poly(PolySystemSet::create(2, {{x1}, {sum}}, false), l, minima);
  EXPECT_EQ(p.chosen, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(p.degree, 2u);

  p = select_product_poly(PolySystemSet::create(2, {{q2, x1}}, false), l, minima);
  EXPECT_EQ(p.chosen, std::vector<std::size_t>{0});
  EXPECT_EQ(p.degree, 2u);
}

TEST(SelectProductPoly, LatticeInsideZeroLocus) {
  // The line spanned by (1, 1) lies in x1 - x2 = 0.
  const auto l = integer_lattice({{1, 1}});
  const auto diff = hpoly(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  EXPECT_THROW(
      {
        try {
          select_product_poly(PolySystemSet::create(2, {{diff}}, false), l, successive_minima(l));
        } catch (const Error& err) {
          EXPECT_EQ(err.code(), Errc::LatticeInZeroLocus);
          throw;
        }
      },
      Error);
}

TEST(GridAvoid, IntegerExamples) {
  const auto x1 = hpoly(2, {{{1, 0}, 1}});
  const auto x1x2 = hpoly(2, {{{1, 1}, 1}});
  const auto x2 = hpoly(2, {{{0, 1}, 1}});

  auto w = solve_grid(PolySystemSet::create(2, {{x1}}, false), z2());
  EXPECT_EQ(w.coeffs, ints({1, 0}));
  EXPECT_EQ(w.xi, ints({1, 0}));

  w = solve_grid(PolySystemSet::create(2, {{x1x2}}, false), z2());
  EXPECT_EQ(w.coeffs, ints({1, 1}));
  ASSERT_EQ(w.certificates.size(), 1u);
  EXPECT_EQ(w.certificates[0].value.rational_value(), 1);

  w = solve_grid(PolySystemSet::create(2, {{x2}}, false), z2());
  EXPECT_EQ(w.coeffs, ints({0, 1}));
}

TEST(GridAvoid, GoldenModule) {
  const auto e = sqrt5_field();
  const SubfieldK k = k_sqrt5(e);
  const ModuleM m = free_module(k, 1);
  const EmbeddedLattice l = build_lattice(m, k);
  const auto x1 = hpoly(2, {{{1, 0}, 1}});
  const auto w = solve_grid(PolySystemSet::create(2, {{x1}}, false), l);
  // v_1 = rho(1) = (1, 1) already has a nonzero first coordinate.
  EXPECT_EQ(w.coeffs, ints({1, 0}));
  EXPECT_EQ(w.norm, FieldElement(e, Rational(1)));
  // bound 2 * 1 * sqrt(2) * sqrt(5)
  EXPECT_TRUE(w.bound.overlaps(Interval(2) * sqrt(Interval(10), 80)));
}

TEST(GridAvoid, TrivialZeroLocusTakesFirstGridPoint) {
  const auto w = solve_grid(PolySystemSet::create(2, {}, true), z2());
  EXPECT_EQ(w.coeffs, ints({1, 0}));
  EXPECT_TRUE(w.certificates.empty());
}

TEST(GridAvoid, FalseTrivialClaimIsReported) {
  // x1 x2 kills (1,0) and (0,1), x1 - x2 kills (1,1).
  const auto diff = hpoly(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  const auto x1x2 = hpoly(2, {{{1, 1}, 1}});
  const auto s = PolySystemSet::create(2, {{diff}, {x1x2}}, true);
  try {
    solve_grid(s, z2());
    FAIL() << "expected CannotWitnessNonvanishing";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::CannotWitnessNonvanishing);
  }
}

TEST(SublatticeAvoid, Examples) {
  const auto l = z2();
  const Interval det = l.covolume();
  auto w = sublattice_avoid({sub({{2, 0}, {0, 2}})}, l, Interval(1), det);
  EXPECT_EQ(w.coeffs, ints({1, 0}));
  EXPECT_EQ(w.norm.rational_value(), 1);

  w = sublattice_avoid({sub({{2, 0}, {0, 2}}), sub({{3, 0}, {0, 3}})}, l, Interval(1), det);
  EXPECT_EQ(w.coeffs, ints({1, 0}));

  w = sublattice_avoid({sub({{1, 1}, {1, -1}})}, l, Interval(1), det);
  EXPECT_EQ(w.coeffs, ints({1, 0}));

  // Gamma = span{(1,0),(0,2)} contains e_1; the first point outside is e_2.
  w = sublattice_avoid({sub({{1, 0}, {0, 2}})}, l, Interval(1), det);
  EXPECT_EQ(w.coeffs, ints({0, 1}));
}

TEST(SublatticeAvoid, WholeLatticeRejected) {
  try {
    sublattice_avoid({sub({{1, 0}, {0, 1}})}, z2(), Interval(1), Interval(1));
    FAIL() << "expected NoProperSublattice";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::NoProperSublattice);
  }
}

TEST(SublatticeAvoid, BoundFormula) {
  // m = 1, Gamma = 2Z^2: D = 4, bound = sqrt(2) * 1 * 1 + 4^(1/2)
  const Interval b = sublattice_bound({sub({{2, 0}, {0, 2}})}, 2, Interval(1), Interval(1));
  EXPECT_TRUE(b.overlaps(sqrt(Interval(2), 80) + Interval(2)));
  EXPECT_LT(b.width(), Rational(1, 1000000));
}

TEST(AvoidanceProperty, ScalingPreservesNonvanishing) {
  const auto e = sqrt2_field();
  const SubfieldK k = k_sqrt2(e, FieldElement::generator(e));
  const EmbeddedLattice l = build_lattice(free_module(k, 1), k);
  const auto p = hpoly(2, {{{2, 0}, 1}, {{0, 2}, -1}, {{1, 1}, 1}});
  const auto s = PolySystemSet::create(2, {{p}}, false);
  const auto w = solve_grid(s, l);
  for (long n = 1; n <= 10; ++n) {
    std::vector<FieldElement> scaled;
    for (const auto& c : w.embedded) scaled.push_back(c * Rational(n));
    const FieldElement value = p.evaluate(scaled);
    ASSERT_FALSE(value.is_zero());
    EXPECT_FALSE(certify_nonzero(value).enclosure.contains_zero());
  }
}

TEST(AvoidanceProperty, RandomMonomialSystems) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> dim(2, 3);
  std::uniform_int_distribution<int> exp(0, 2);
  for (int round = 0; round < 30; ++round) {
    const auto n = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<long>> cols;
    IntMatrix a(n, n, Integer(0));
    do {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
      }
    } while (determinant(to_rational(a)) == 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long> c;
      for (std::size_t i = 0; i < n; ++i) c.push_back(a(i, j).get_si());
      cols.push_back(c);
    }
    const auto l = integer_lattice(cols);
    std::vector<std::vector<HomogeneousPoly>> systems;
    for (int s = 0; s < 2; ++s) {
      Exponents ex(n, 0);
      while (std::all_of(ex.begin(), ex.end(), [](unsigned v) { return v == 0; })) {
        for (auto& v : ex) v = static_cast<unsigned>(exp(rng));
      }
      systems.push_back({HomogeneousPoly::create(n, {{ex, Rational(1)}})});
    }
    const auto set = PolySystemSet::create(n, systems, false);
    const auto w = solve_grid(set, l);
    EXPECT_TRUE(avoids(set, w.embedded));
    EXPECT_LE(w.norm_enclosure.hi(), w.bound.lo());
    for (const auto& c : w.certificates) EXPECT_FALSE(c.enclosure.contains_zero());
  }
}

TEST(AvoidanceProperty, RandomSublattices) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-4, 4);
  const auto l = integer_lattice({{2, 1}, {-1, 3}});
  const Interval det = l.covolume();
  for (int round = 0; round < 30; ++round) {
    std::vector<Sublattice> gammas;
    for (int m = 0; m < 2; ++m) {
      IntMatrix a(2, 2, Integer(0));
      Integer d = 0;
      do {
        for (std::size_t i = 0; i < 2; ++i) {
          for (std::size_t j = 0; j < 2; ++j) a(i, j) = entry(rng);
        }
        d = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
      } while (abs(d) < 2);
      gammas.emplace_back(a);
    }
    const auto w = sublattice_avoid(gammas, l, Interval(1), det);
    EXPECT_TRUE(avoids(gammas, w.coeffs));
    EXPECT_LT(w.norm_enclosure.hi(), w.bound.lo());
  }
}

TEST(AvoidanceProperty, Deterministic) {
  const auto x1x2 = hpoly(2, {{{1, 1}, 1}});
  const auto s = PolySystemSet::create(2, {{x1x2}}, false);
  const auto a = solve_grid(s, integer_lattice({{3, 1}, {1, 2}}));
  const auto b = solve_grid(s, integer_lattice({{3, 1}, {1, 2}}));
  EXPECT_EQ(a.coeffs, b.coeffs);
  EXPECT_EQ(a.xi, b.xi);
}

}  // namespace
}  // namespace kronav

#include <gtest/gtest.h>

#include "kronav/error.hpp"
#include "kronav/exactnum/height.hpp"
#include "kronav/fieldlat/denominator.hpp"
#include "kronav/fieldlat/module.hpp"
#include "kronav/geometry/enumerate.hpp"
#include "support/fixtures.hpp"

namespace kronav {
namespace {

using namespace kronav::testing;

// Diagonal module sum_j (1/n_j) Z e_j over K = Q.
ModuleM scaled_rational_module(const SubfieldK& k, const std::vector<long>& denominators) {
  const int w = static_cast<int>(denominators.size());
  std::vector<PseudoBasisEntry> pb;
  for (int j = 0; j < w; ++j) {
    PseudoBasisEntry e;
    e.ideal = {{make_rational(1, denominators[static_cast<std::size_t>(j)])}};
    for (int c = 0; c < w; ++c) e.y.push_back({Rational(c == j ? 1 : 0)});
    pb.push_back(e);
  }
  return ModuleM::create(k, w, pb);
}

TEST(Subfield, RejectsBadDescriptors) {
  const auto e = sqrt2_field();
  const FieldElement g = FieldElement::generator(e);
  // wrong discriminant
  EXPECT_THROW(SubfieldK::create(e, {poly({-2, 0, 1}), {g, -g}, {}, {{1, 0}, {0, 1}}, Integer(5)}), Error);
  // image that is not a root
  try {
    SubfieldK::create(e, {poly({-2, 0, 1}), {g, g + FieldElement(e, Rational(1))}, {}, {{1, 0}, {0, 1}}, Integer(8)});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::ImageNotInE);
  }
  // basis not closed under multiplication: {1, g/2}
  EXPECT_THROW(SubfieldK::create(e, {poly({-2, 0, 1}), {g, -g}, {}, {{1, 0}, {0, q("1/2")}}, Integer(2)}), Error);
}

TEST(MinkowskiEmbed, RealAndRationalCases) {
  const auto e = sqrt2_field();
  const FieldElement g = FieldElement::generator(e);
  const SubfieldK kq = k_rationals(e);
  const auto v = minkowski_embed({{Rational(3)}, {Rational(-1)}}, kq);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], FieldElement(e, Rational(3)));
  EXPECT_EQ(v[1], FieldElement(e, Rational(-1)));

  const SubfieldK k2 = k_sqrt2(e, g);
  const auto one = minkowski_embed({k2.one()}, k2);
  EXPECT_EQ(one[0], FieldElement(e, Rational(1)));
  EXPECT_EQ(one[1], FieldElement(e, Rational(1)));
  const auto root = minkowski_embed({kel({"0", "1"})}, k2);
  EXPECT_EQ(root[0], g);
  EXPECT_EQ(root[1], -g);
}

TEST(MinkowskiEmbed, SlotMajorOrderingForVectors) {
  const auto e = sqrt2_field();
  const FieldElement g = FieldElement::generator(e);
  const SubfieldK k2 = k_sqrt2(e, g);
  // (1, sqrt2) -> (sigma1(1), sigma1(sqrt2), sigma2(1), sigma2(sqrt2))
  const auto v = minkowski_embed({kel({"1", "0"}), kel({"0", "1"})}, k2);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0], FieldElement(e, Rational(1)));
  EXPECT_EQ(v[1], g);
  EXPECT_EQ(v[2], FieldElement(e, Rational(1)));
  EXPECT_EQ(v[3], -g);
}

TEST(BuildLattice, GoldenModule) {
  const auto e = sqrt5_field();
  const SubfieldK k = k_sqrt5(e);
  const ModuleM m = free_module(k, 1);
  const EmbeddedLattice l = build_lattice(m, k);
  ASSERT_EQ(l.rank(), 2u);
  const FieldElement g = FieldElement::generator(e);
  EXPECT_EQ(l.basis()(0, 1), (FieldElement(e, Rational(1)) + g) * q("1/2"));
  EXPECT_EQ(l.basis()(1, 1), (FieldElement(e, Rational(1)) - g) * q("1/2"));
  EXPECT_EQ(discriminant_M(m, k), 5);
  const auto det = determinant(l, m, k);
  EXPECT_TRUE(det.closed_form_agrees);
  EXPECT_TRUE(det.value.overlaps(sqrt(Interval(5), 80)));
}

TEST(BuildLattice, HalfLattice) {
  const auto e = rational_field();
  const SubfieldK k = k_rationals(e);
  const ModuleM m = scaled_rational_module(k, {2});
  const EmbeddedLattice l = build_lattice(m, k);
  EXPECT_EQ(l.basis()(0, 0), FieldElement(e, q("1/2")));
  EXPECT_EQ(discriminant_M(m, k), q("1/4"));
  const auto det = determinant(l, m, k);
  EXPECT_EQ(det.value, Interval(q("1/2")));
}

TEST(BuildLattice, DependentGeneratorsRejected) {
  const auto e = rational_field();
  const SubfieldK k = k_rationals(e);
  std::vector<PseudoBasisEntry> pb{{{{Rational(1)}}, {{Rational(1)}, {Rational(1)}}},
                                   {{{Rational(1)}}, {{Rational(2)}, {Rational(2)}}}};
  try {
    ModuleM::create(k, 2, pb);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::RankDeficient);
  }
}

TEST(Determinant, RankTwoScaledModuleShowsModuleDiscDiscrepancy) {
  const auto e = rational_field();
  const SubfieldK k = k_rationals(e);
  const ModuleM m = scaled_rational_module(k, {3, 2});
  const auto det = determinant(build_lattice(m, k), m, k);
  EXPECT_TRUE(det.closed_form_agrees);
  EXPECT_EQ(det.closed_form_squared, q("1/36"));
  EXPECT_FALSE(det.module_disc_form_agrees);
  EXPECT_EQ(det.module_disc_form_squared, q("1/1296"));
}

TEST(Determinant, AgreesOnTestFields) {
  const auto e2 = sqrt2_field();
  const auto e5 = sqrt5_field();
  const auto eq = rational_field();
  const std::vector<std::pair<SubfieldK, FieldPtr>> fields{
      {k_rationals(eq), eq}, {k_sqrt2(e2, FieldElement::generator(e2)), e2}, {k_sqrt5(e5), e5}, {k_gaussian(eq), eq}};
  for (const auto& [k, e] : fields) {
    for (int s = 1; s <= 2; ++s) {
      const ModuleM m = free_module(k, s);
      const auto det = determinant(build_lattice(m, k), m, k);
      EXPECT_TRUE(det.closed_form_agrees) << "d=" << k.d() << " s=" << s;
      EXPECT_TRUE(det.value.overlaps(det.closed_form));
    }
  }
}

TEST(Determinant, GaussianIntegersHaveUnitCovolume) {
  const auto e = rational_field();
  const SubfieldK k = k_gaussian(e);
  const ModuleM m = free_module(k, 1);
  const auto det = determinant(build_lattice(m, k), m, k);
  EXPECT_EQ(det.gram, FieldElement(e, Rational(1)));
  EXPECT_TRUE(det.closed_form_agrees);
}

TEST(DenominatorIdeal, RationalExamples) {
  const auto e = rational_field();
  const SubfieldK k = k_rationals(e);
  const auto half = denominator_ideal(scaled_rational_module(k, {2}), k);
  ASSERT_EQ(half.z_basis.size(), 1u);
  EXPECT_EQ(abs(half.z_basis[0][0]), 2);
  EXPECT_EQ(half.candidates.front(), kel({"2"}));
  const auto mixed = denominator_ideal(scaled_rational_module(k, {3, 2}), k);
  EXPECT_EQ(abs(mixed.z_basis[0][0]), 6);
  EXPECT_EQ(mixed.candidates.front(), kel({"6"}));
  const auto integral = denominator_ideal(free_module(k, 2), k);
  EXPECT_EQ(integral.candidates.front(), kel({"1"}));
}

TEST(DenominatorIdeal, CandidatesClearTheModule) {
  const auto e = sqrt5_field();
  const SubfieldK k = k_sqrt5(e);
  std::vector<PseudoBasisEntry> pb{{{kel({"1/2", "0"}), kel({"0", "1/2"})}, {k.one()}}};
  const ModuleM m = ModuleM::create(k, 1, pb);
  const auto ideal = denominator_ideal(m, k, 20);
  ASSERT_EQ(ideal.candidates.size(), 20u);
  for (const auto& alpha : ideal.candidates) {
    for (const auto& gen : m.z_basis()) {
      for (const auto& c : gen) EXPECT_TRUE(SubfieldK::is_integral(k.mul(alpha, c)));
    }
  }
}

TEST(CKBound, KnownValues) {
  const auto e = rational_field();
  const SubfieldK k = k_rationals(e);
  const auto half = denominator_ideal(scaled_rational_module(k, {2}), k);
  const CKBound b = c_K_bound(half, k, 6, 1);
  EXPECT_EQ(b.alpha.alpha, kel({"2"}));
  EXPECT_EQ(b.value, Interval(4096));
  const CKBound one = c_K_bound(denominator_ideal(free_module(k, 2), k), k, 6, 2);
  EXPECT_EQ(one.value, Interval(1));
}

TEST(CKBound, NormLowerBoundHoldsForLatticeVectors) {
  // |x| >= h(alpha)^-1 / sqrt 2 for nonzero x and alpha in the denominator ideal.
  const auto e = sqrt5_field();
  const SubfieldK k = k_sqrt5(e);
  std::vector<PseudoBasisEntry> pb{{{kel({"1/3", "0"}), kel({"0", "1/3"})}, {k.one()}}};
  const ModuleM m = ModuleM::create(k, 1, pb);
  const auto lattice = build_lattice(m, k);
  const auto ideal = denominator_ideal(m, k, 10);
  const auto points = points_within(lattice, 2);
  for (const auto& alpha : ideal.candidates) {
    const auto h = alpha_heights(alpha, k);
    const Interval bound = Interval(1) / (h.h_alpha * sqrt(Interval(2), 64));
    for (const auto& p : points) {
      if (p.norm.is_zero()) continue;
      EXPECT_GE(p.norm_enclosure.lo(), bound.hi());
    }
  }
}

TEST(Height, SupNormAgainstArchimedeanValues) {
  // |x| <= |a|_v <= sqrt(wd) |x| for the complex place of Q(i).
  const auto e = rational_field();
  const SubfieldK k = k_gaussian(e);
  const ModuleM m = free_module(k, 2);
  const auto lattice = build_lattice(m, k);
  for (const auto& p : points_within(lattice, 2)) {
    if (p.norm.is_zero()) continue;
    // a_j = x_j + i x_{j+2}: |a|_v = max_j sqrt(x_j^2 + x_{j+2}^2)
    Rational best = 0;
    for (std::size_t j = 0; j < 2; ++j) {
      const Rational re = p.embedded[j].rational_value();
      const Rational im = p.embedded[j + 2].rational_value();
      best = std::max(best, Rational(re * re + im * im));
    }
    const Rational x = p.norm.rational_value();
    EXPECT_LE(x * x, best);
    EXPECT_LE(best, 4 * x * x);
  }
}

}  // namespace
}  // namespace kronav

#include <gtest/gtest.h>

#include "acmsplit/errors.hpp"
#include "acmsplit/normal_bundle.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace acmsplit;
using namespace acmsplit::fixtures;

TEST(Kmr, CompleteIntersections) {
  EXPECT_EQ(kmr_h0_normal(ci(1, 1, 2)), Count(17));
  EXPECT_EQ(kmr_h0_normal(ci(1, 1, 3)), Count(27));
  EXPECT_EQ(kmr_h0_normal(ci(1, 2, 2)), Count(31));
  EXPECT_EQ(kmr_h0_normal(ci(1, 1, 4)), Count(42));
  EXPECT_EQ(kmr_h0_normal(ci(1, 2, 3)), Count(48));
}

TEST(Kmr, PfaffianSurfaces) {
  EXPECT_EQ(kmr_h0_normal(elliptic_quintic()), Count(35));
  EXPECT_EQ(kmr_h0_normal(degree13()), Count(79));
  EXPECT_EQ(kmr_h0_normal(degree14()), Count(77));
  EXPECT_EQ(kmr_h0_normal(degree20()), Count(110));
}

TEST(Kmr, ParameterScans) {
  EXPECT_EQ(kmr_parameter_scan(degree8(), {0, 5}), Count(54));
  EXPECT_EQ(kmr_parameter_scan(degree11(), {2, 5}), Count(83));
  EXPECT_EQ(kmr_parameter_scan(degree12(), {0, 1}), Count(81));
  EXPECT_EQ(kmr_parameter_scan(degree20(), {0, 5}), Count(110));
  EXPECT_THROW(kmr_h0_normal(degree8()), UnresolvedParameter);
}

TEST(Kmr, CancellingPairsAtHalfSocleLeaveTheValueUnchanged) {
  // the quadric with x extra generator/syzygy pairs in degree 2
  const GorensteinResolution res{{{{1, 2}, {2, var("x") + AffineExpr(1)}}},
                                 {{{2, var("x") + AffineExpr(1)}, {3, 2}}},
                                 4};
  ASSERT_TRUE(validate(res, {0, 5}).empty()) << describe(validate(res, {0, 5}));
  EXPECT_EQ(kmr_parameter_scan(res, {0, 5}), Count(17));
  EXPECT_EQ(h0_ideal(res, 4, 3), h0_ideal(ci(1, 1, 2), 4));
}

TEST(Kmr, SplitNormalBundleOfCompleteIntersection) {
  // N_S = O_S(a) ⊕ O_S(b) ⊕ O_S(c), with h^0(O_S(t)) from the monomial quotient
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      for (int c = b; c <= 4; ++c) {
        const std::int64_t expected = oracle::koszul_ci_quotient_dim(a, b, c, a) +
                                      oracle::koszul_ci_quotient_dim(a, b, c, b) +
                                      oracle::koszul_ci_quotient_dim(a, b, c, c);
        EXPECT_EQ(kmr_h0_normal(ci(a, b, c)), Count(expected))
            << "CI(" << a << "," << b << "," << c << ")";
        const auto res = ci(a, b, c);
        EXPECT_EQ(kmr_h0_normal(res),
                  h0_structure(res, a) + h0_structure(res, b) + h0_structure(res, c));
      }
    }
  }
}

TEST(Kmr, EntryOrderDoesNotMatter) {
  const GorensteinResolution shuffled{{{{3, 4}, {2, 1}}}, {{{5, 1}, {4, 4}}}, 7};
  EXPECT_EQ(kmr_h0_normal(shuffled), kmr_h0_normal(degree13()));
  const auto in = KmrInput::from(shuffled);
  EXPECT_EQ(in.sorted_gens, (std::vector<int>{2, 3, 3, 3, 3}));
  EXPECT_EQ(in.sorted_syz, (std::vector<int>{5, 4, 4, 4, 4}));
  EXPECT_EQ(in.rank(), 5u);
}

TEST(Kmr, NegativePairTermsVanishForFixedShapes) {
  for (const auto& [name, res, grid] : all_catalog_resolutions()) {
    if (res.is_parametric()) continue;
    EXPECT_EQ(kmr_terms(res).negative_pairs, Count(0)) << name;
  }
}

TEST(Kmr, ParametricShapesNeedTheNegativePairTerms) {
  // a degree-4 generator ordered before a degree-3 syzygy gives C(6,5) at b = 2
  EXPECT_EQ(kmr_terms(degree11(), 2).negative_pairs, Count(6));
  EXPECT_EQ(kmr_terms(degree8(), 0).negative_pairs, Count(0));
  EXPECT_EQ(kmr_terms(degree8(), 1).negative_pairs, Count(0));
  EXPECT_EQ(kmr_terms(degree8(), 2).negative_pairs, Count(1));
  for (std::int64_t x = 0; x <= 5; ++x) {
    const auto t = kmr_terms(degree8(), x);
    EXPECT_EQ(t.total(), 54);
    // without them the value would drift with x
    if (x > 1) EXPECT_NE(t.total() + t.negative_pairs.value(), 54);
  }
}

TEST(Kmr, TermsOfTheQuadric) {
  // gens 1,1,2 ascending; syz 3,3,2 descending
  const auto t = kmr_terms(ci(1, 1, 2));
  EXPECT_EQ(t.structure_sum, Count(4 + 4 + 9));
  EXPECT_EQ(t.generator_sections, Count(6 + 6 + 21));
  EXPECT_EQ(t.total(), 17);
}

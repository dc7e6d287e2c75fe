#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "smc/modarith.hpp"
#include "smc/spectrum.hpp"

using smc::Int;
using smc::Spectrum;

TEST(SetAlgebra, ProductsAndSums) {
  EXPECT_EQ(smc::normalize({5, 1, 5, 3}), (Spectrum{1, 3, 5}));
  EXPECT_EQ(smc::set_product({1, 2}, {3, 5}), (Spectrum{3, 5, 6, 10}));
  EXPECT_EQ(smc::set_sum({1, 2}, {3, 5}), (Spectrum{4, 5, 6, 7}));
  EXPECT_EQ(smc::set_product({}, {3}), Spectrum{});
}

TEST(CyclicSpectrum, MatchesUnitEnumeration) {
  EXPECT_EQ(smc::spec_cyclic(12), (Spectrum{2, 4, 6, 12}));
  EXPECT_EQ(smc::spec_cyclic(9), (Spectrum{1, 3, 9}));
  for (Int n = 1; n <= 300; ++n) EXPECT_EQ(fixtures::as_set(smc::spec_cyclic(n)), oracle::cyclic_spectrum(n)) << n;
}

TEST(DivisorTuples, Counts) {
  EXPECT_EQ(smc::divisor_tuples(15, 2, false).size(), 9u);
  EXPECT_EQ(smc::divisor_tuples(15, 2, true).size(), 6u);
  EXPECT_EQ(smc::divisor_tuples(1, 3, false).size(), 1u);
  for (const auto& t : smc::divisor_tuples(60, 3, false)) {
    ASSERT_EQ(t.size(), 3u);
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_EQ(60 % t[i], 0);
      for (std::size_t j = i + 1; j < t.size(); ++j) EXPECT_EQ(std::gcd(t[i], t[j]), 1);
    }
  }
}

struct Pinned {
  Int n;
  int m;
  Int p;
  Int alpha;
  Spectrum expected;
};

class PinnedSpectra : public ::testing::TestWithParam<Pinned> {};

TEST_P(PinnedSpectra, FormulaAndExhaustiveSearchAgree) {
  const auto& c = GetParam();
  EXPECT_EQ(oracle::spectrum(oracle::Group(c.n, c.m, c.p, c.alpha)), fixtures::as_set(c.expected));
  EXPECT_EQ(smc::spec_full(c.n, c.m, c.p, c.alpha), c.expected);
}

INSTANTIATE_TEST_SUITE_P(
    Groups, PinnedSpectra,
    ::testing::Values(Pinned{5, 0, 2, 4, {2, 4}},              // D_5
                      Pinned{15, 0, 2, 14, {3, 5, 9}},         // D_15
                      Pinned{1, 2, 3, 4, {3, 5, 11}},          // C_9 x| C_3
                      Pinned{1, 3, 2, 3, {5, 7}},              // C_8 x| C_2, alpha = 3
                      Pinned{1, 3, 2, 5, {4, 6, 10}},          // C_8 x| C_2, alpha = 5
                      Pinned{1, 2, 2, 3, {3, 5}},              // D_4
                      Pinned{7, 0, 3, 2, {3, 5}},              // C_7 x| C_3
                      Pinned{1, 3, 3, 10, {3, 9, 15, 33}},     // p-group of order 81
                      Pinned{3, 2, 2, 35, {5, 7, 9}},          // D_12
                      Pinned{35, 0, 2, 6, {2, 5, 10, 25}}));   // C_5 x D_7

TEST(Spectrum, ClosedFormsAgreeWithExhaustiveSearch) {
  for (const auto& [n, m, p, alpha] : fixtures::small_groups(42)) {
    EXPECT_EQ(fixtures::as_set(smc::spec_full(n, m, p, alpha)), oracle::spectrum(oracle::Group(n, m, p, alpha)))
        << n << " " << m << " " << p << " " << alpha;
  }
}

TEST(Spectrum, PGroupFamily) {
  EXPECT_EQ(smc::spec_pgroup(3, 3), (Spectrum{3, 9, 15, 33}));
  EXPECT_EQ(smc::spec_pgroup(3, 2), (Spectrum{4, 6, 10}));
  EXPECT_EQ(smc::spec_pgroup(2, 3), (Spectrum{3, 5, 11}));
}

TEST(Spectrum, RejectsImpossibleFreeActions) {
  EXPECT_THROW(smc::spec_trivial_ppart(5, 0, 3), smc::ValidationError);
  EXPECT_THROW(smc::spec_full(7, 0, 3, 1), smc::ValidationError);
}

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "smc/realize.hpp"
#include "smc/spectrum.hpp"

using smc::Int;
using smc::SmcGroup;

TEST(Realize, WitnessesHaveTheirPredictedReidemeisterNumber) {
  for (const auto& [n, m, p, alpha] : fixtures::small_groups(64)) {
    const SmcGroup G(n, m, p, alpha);
    const oracle::Group O(n, m, p, alpha);
    std::set<Int> covered;
    for (const auto& r : smc::realize_spectrum(G)) {
      EXPECT_EQ(oracle::twisted_count(O, fixtures::to_oracle(O, r.phi)), r.predicted)
          << n << " " << m << " " << p << " " << alpha << " " << r.family;
      covered.insert(r.predicted);
    }
    EXPECT_EQ(covered, fixtures::as_set(smc::spec_full(G)));
  }
}

TEST(Realize, CentralFactorIsLifted) {
  // C_5 x (C_7 x| C_3)
  const SmcGroup G(35, 0, 3, 11);
  std::set<Int> covered;
  for (const auto& r : smc::realize_spectrum(G)) {
    EXPECT_EQ(smc::twisted_class_count(G, r.phi, 1000), r.predicted) << r.family;
    covered.insert(r.predicted);
  }
  EXPECT_EQ(covered, fixtures::as_set(smc::spec_full(G)));
}

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "smc/autos.hpp"

using smc::Automorphism;
using smc::Budget;
using smc::Int;
using smc::SmcGroup;

namespace {

const Budget kBudget{100'000, 1'000'000};

}  // namespace

TEST(Automorphisms, DihedralOfOrderTen) {
  const SmcGroup G(5, 0, 2, 4);
  EXPECT_EQ(smc::automorphism_count(G, kBudget), 20);
  EXPECT_EQ(smc::enumerate_automorphisms(G, kBudget).size(), 20u);
}

TEST(Automorphisms, EnumerationMatchesExhaustiveSearch) {
  for (const auto& [n, m, p, alpha] : fixtures::small_groups(64)) {
    const SmcGroup G(n, m, p, alpha);
    const oracle::Group O(n, m, p, alpha);
    std::set<oracle::Hom> expected;
    for (const auto& h : oracle::automorphisms(O)) expected.insert(h);
    std::set<oracle::Hom> got;
    for (const auto& phi : smc::enumerate_automorphisms(G, kBudget)) got.insert(fixtures::to_oracle(O, phi));
    EXPECT_EQ(got, expected) << n << " " << m << " " << p << " " << alpha;
    EXPECT_EQ(smc::automorphism_count(G, kBudget), static_cast<Int>(expected.size()));
    if (smc::has_structured_automorphisms(G)) {
      EXPECT_EQ(smc::enumerate_automorphisms_structured(G, kBudget), smc::enumerate_automorphisms_generic(G, kBudget));
    }
  }
}

TEST(Automorphisms, DefectMessages) {
  const SmcGroup G(5, 0, 2, 4);
  EXPECT_EQ(smc::automorphism_defect(G, {0, 0}, {0, 1}), "image of x has order 1, expected 5");
  EXPECT_EQ(smc::automorphism_defect(G, {1, 0}, {0, 0}), "images violate y^-1 x y = x^alpha");
  EXPECT_EQ(smc::automorphism_defect(G, {7, 0}, {0, 1}), "images are not canonical group elements");
  EXPECT_FALSE(smc::automorphism_defect(G, {2, 0}, {3, 1}).has_value());
  EXPECT_THROW(smc::make_automorphism(G, {0, 0}, {0, 1}), smc::ValidationError);
  const SmcGroup C8(1, 3, 2, 3);
  EXPECT_EQ(smc::automorphism_defect(C8, {1, 0}, {1, 1}), "image of y does not satisfy y^p = 1");
}

TEST(Automorphisms, CompositionMatchesPointwise) {
  const SmcGroup G(1, 3, 2, 5);
  const auto all = smc::enumerate_automorphisms(G, kBudget);
  for (const auto& phi : all) {
    for (const auto& psi : all) {
      const Automorphism c = smc::compose(G, phi, psi);
      for (Int i = 0; i < G.order(); ++i) {
        const auto g = G.element(i);
        EXPECT_EQ(smc::apply(G, c, g), smc::apply(G, phi, smc::apply(G, psi, g)));
      }
    }
    const auto g = G.element(5);
    const Automorphism inner = smc::compose_with_inner(G, phi, g);
    for (Int i = 0; i < G.order(); ++i) {
      const auto h = G.element(i);
      EXPECT_EQ(smc::apply(G, inner, h), G.conjugate(g, smc::apply(G, phi, h)));
    }
  }
}

TEST(Automorphisms, TwistedClassesMatchOrbitOracle) {
  for (const auto& [n, m, p, alpha] : fixtures::small_groups(48)) {
    const SmcGroup G(n, m, p, alpha);
    const oracle::Group O(n, m, p, alpha);
    const auto classes = smc::conjugacy_classes(G, 1000);
    for (const auto& phi : smc::enumerate_automorphisms(G, kBudget)) {
      const Int expected = oracle::twisted_count(O, fixtures::to_oracle(O, phi));
      EXPECT_EQ(smc::twisted_class_count(G, phi, 1000), expected);
      EXPECT_EQ(smc::reidemeister_via_classes(G, classes, phi), expected);
      const auto partition = smc::twisted_classes(G, phi, 1000);
      EXPECT_EQ(static_cast<Int>(partition.classes.size()), expected);
    }
  }
}

TEST(Automorphisms, AbelianizationSize) {
  for (const auto& [n, m, p, alpha] : fixtures::small_groups(200)) {
    const SmcGroup G(n, m, p, alpha);
    const auto ab = smc::abelianization(G, 1000);
    EXPECT_EQ(static_cast<Int>(ab.representatives.size()) * ab.commutator_order, G.order());
    EXPECT_EQ(smc::abelianization_fixed_points(G, ab, smc::identity_automorphism(G)),
              static_cast<Int>(ab.representatives.size()));
  }
}

TEST(Automorphisms, CosetRepresentativesCoverSpectrum) {
  for (const auto& [n, m, p, alpha] : fixtures::small_groups(120)) {
    const SmcGroup G(n, m, p, alpha);
    std::set<Int> full;
    for (const auto& phi : smc::enumerate_automorphisms(G, kBudget)) full.insert(smc::twisted_class_count(G, phi, 1000));
    EXPECT_EQ(fixtures::as_set(smc::reidemeister_spectrum_bruteforce(G, kBudget)), full)
        << n << " " << m << " " << p << " " << alpha;
  }
}

TEST(Automorphisms, BudgetGuard) {
  const SmcGroup G(499, 0, 2, 498);
  EXPECT_THROW(smc::enumerate_automorphisms(G, {1'000'000, 1000}), smc::BudgetExceeded);
  EXPECT_THROW(smc::twisted_class_count(G, smc::identity_automorphism(G), 10), smc::BudgetExceeded);
}

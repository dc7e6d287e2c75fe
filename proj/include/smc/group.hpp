#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "smc/common.hpp"

namespace smc {

/// x^x y^y with 0 <= x < N and 0 <= y < p.
struct GroupElement {
  Int x = 0;
  Int y = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

enum class CaseTag { TrivialPPart, NontrivialPPart, P2Inversion, P2Case2, PGroup };

std::string to_string(CaseTag tag);

struct CaseInfo {
  CaseTag tag = CaseTag::TrivialPPart;
  // α ≡ β p^(m-1) + 1 mod p^m; set for NontrivialPPart and PGroup.
  std::optional<Int> beta;
};

/// Splitting of C_n into the part fixed pointwise by the action and the part
/// acted on freely.
struct FixedPart {
  Int h = 1;
  Int n_free = 1;
  Int alpha_reduced = 0;  // alpha mod n_free * p^m
};

FixedPart fixed_subgroup_H(Int n, int m, Int p, Int alpha);

/// Case of a group whose action on C_n_free is free and whose total action is
/// nontrivial. Throws ValidationError otherwise.
CaseInfo classify_case(Int n_free, int m, Int p, Int alpha);

/// (C_n x C_{p^m}) ⋊ C_p with y^-1 x y = x^alpha, N = n p^m.
class SmcGroup {
 public:
  SmcGroup(Int n, int m, Int p, Int alpha);

  Int n() const { return n_; }
  int m() const { return m_; }
  Int p() const { return p_; }
  Int N() const { return N_; }
  Int p_power() const { return pm_; }
  Int alpha() const { return alpha_; }
  Int order() const { return N_ * p_; }
  const FixedPart& fixed_part() const { return fixed_; }
  const CaseInfo& case_info() const { return case_; }

  /// alpha^j mod N for any integer j.
  Int alpha_pow(Int j) const;

  GroupElement identity() const { return {0, 0}; }
  GroupElement x() const { return {N_ == 1 ? 0 : 1, 0}; }
  GroupElement y() const { return {0, p_ == 1 ? 0 : 1}; }

  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement power(const GroupElement& g, Int e) const;
  /// s g s^-1
  GroupElement conjugate(const GroupElement& s, const GroupElement& g) const;
  Int element_order(const GroupElement& g) const;

  Int index(const GroupElement& g) const { return g.y * N_ + g.x; }
  GroupElement element(Int index) const { return {index % N_, index / N_}; }
  GroupElement canonical(Int xexp, Int yexp) const;

  /// |[G,G]| from the case classification.
  Int commutator_subgroup_order() const;

  /// [G,G] as the normal closure of [x, y], by explicit generation.
  std::vector<GroupElement> commutator_subgroup_elements(Int budget) const;
  Int commutator_subgroup_generated(Int budget) const { return static_cast<Int>(commutator_subgroup_elements(budget).size()); }

  /// All elements commuting with both generators.
  std::vector<GroupElement> centre(Int budget) const;

  void require_order_within(Int budget) const;

 private:
  Int n_, p_, N_, pm_, alpha_;
  int m_;
  std::vector<Int> alpha_pows_;  // alpha^j for 0 <= j < p
  std::vector<Int> y_prefix_;    // sum of alpha^-j over 0 <= j < r, for 0 <= r <= p
  FixedPart fixed_;
  CaseInfo case_;
};

struct ConjugacyClasses {
  std::vector<std::vector<GroupElement>> classes;
  std::vector<int> class_of;  // by element index
};

ConjugacyClasses conjugacy_classes(const SmcGroup& G, Int budget);

}  // namespace smc

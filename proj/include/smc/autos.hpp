#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smc/group.hpp"

namespace smc {

/// An automorphism is determined by the images of the two generators.
struct Automorphism {
  GroupElement img_x;
  GroupElement img_y;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

/// Description of the first defining relation the images violate, or nullopt
/// when they extend to an automorphism.
std::optional<std::string> automorphism_defect(const SmcGroup& G, const GroupElement& img_x,
                                               const GroupElement& img_y);

/// Throws ValidationError naming the failed relation.
Automorphism make_automorphism(const SmcGroup& G, const GroupElement& img_x, const GroupElement& img_y);

Automorphism identity_automorphism(const SmcGroup& G);

GroupElement apply(const SmcGroup& G, const Automorphism& phi, const GroupElement& g);

/// phi ∘ psi
Automorphism compose(const SmcGroup& G, const Automorphism& phi, const Automorphism& psi);

/// τ_g ∘ phi, where τ_g(z) = g z g^-1.
Automorphism compose_with_inner(const SmcGroup& G, const Automorphism& phi, const GroupElement& g);

inline bool preserves_cyclic_part(const Automorphism& phi) { return phi.img_x.y == 0; }

/// True when every automorphism has the form x -> x^γ, y -> x^a y.
bool has_structured_automorphisms(const SmcGroup& G);

/// Residues a mod N for which x -> x^γ, y -> x^a y is an automorphism.
/// Requires has_structured_automorphisms.
std::vector<Int> structured_y_offsets(const SmcGroup& G);

/// |Aut(G)|; closed form on the structured path, enumeration otherwise.
Int automorphism_count(const SmcGroup& G, const Budget& budget);

std::vector<Automorphism> enumerate_automorphisms_structured(const SmcGroup& G, const Budget& budget);
std::vector<Automorphism> enumerate_automorphisms_generic(const SmcGroup& G, const Budget& budget);
/// Structured path when available, generic otherwise. Sorted.
std::vector<Automorphism> enumerate_automorphisms(const SmcGroup& G, const Budget& budget);

struct TwistedClassPartition {
  std::vector<std::vector<GroupElement>> classes;
  std::vector<int> class_of;  // by element index
};

TwistedClassPartition twisted_classes(const SmcGroup& G, const Automorphism& phi, Int budget);
Int twisted_class_count(const SmcGroup& G, const Automorphism& phi, Int budget);

/// Number of conjugacy classes C with phi(C) = C.
Int reidemeister_via_classes(const SmcGroup& G, const ConjugacyClasses& classes, const Automorphism& phi);
Int reidemeister_via_classes(const SmcGroup& G, const Automorphism& phi, Int budget);

/// Cosets of [G, G], labelled by element index.
struct Abelianization {
  Int commutator_order = 0;
  std::vector<int> label;
  std::vector<GroupElement> representatives;
};

Abelianization abelianization(const SmcGroup& G, Int budget);
Int abelianization_fixed_points(const SmcGroup& G, const Abelianization& ab, const Automorphism& phi);

/// One automorphism per coset of the inner automorphisms by powers of x
/// (structured path), or every automorphism (generic path).
std::vector<Automorphism> automorphism_coset_representatives(const SmcGroup& G, const Budget& budget);

/// {R(φ) : φ ∈ Aut(G)} by counting fixed conjugacy classes.
Spectrum reidemeister_spectrum_bruteforce(const SmcGroup& G, const Budget& budget);

}  // namespace smc

#pragma once

#include <vector>

#include "smc/autos.hpp"

namespace smc {

/// Formal sum of N-th roots of unity, Σ ζ^e over a sorted multiset of
/// exponents mod N. The empty multiset is 0.
struct CyclotomicValue {
  Int modulus = 1;
  std::vector<Int> exponents;
  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;
};

/// Removes every complete coset {c + jN/q : 0 <= j < q} (which sums to zero)
/// for the prime q dividing the modulus.
CyclotomicValue remove_zero_cycles(CyclotomicValue value, Int q);

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
std::vector<Int> cyclotomic_polynomial(Int N);

/// Exact equality of the represented complex numbers.
bool cyclotomic_equal(const CyclotomicValue& a, const CyclotomicValue& b);

/// Orbits of the dual of C_N (exponents a mod N) under a -> a·alpha.
struct DualOrbits {
  std::vector<Int> orbit_of;           // orbit id per exponent
  std::vector<Int> free_representatives;  // smallest member of each orbit of size p
  Int fixed_count = 0;                 // orbits of size 1
};

DualOrbits dual_orbits(const SmcGroup& G, Int budget);

/// Value at g of the p-dimensional character induced from χ_a. Throws if the
/// orbit of a has size 1.
CyclotomicValue induced_character_value(const SmcGroup& G, Int a, const GroupElement& g);

/// Number of 1-dimensional characters, counted on the dual side.
Int linear_character_count(const SmcGroup& G);

/// Number of p-dimensional irreducible characters.
Int induced_character_count(const SmcGroup& G);

/// Fixed 1-dimensional characters via the induced map on G/[G,G].
Int ch1_fixed(const SmcGroup& G, const Abelianization& ab, const Automorphism& phi);

/// Fixed 1-dimensional characters counted on the dual of G/[G,G].
Int ch1_fixed_dual(const SmcGroup& G, const Automorphism& phi);

/// Values ch_{1,φ} may take according to the per-case closed forms.
std::vector<Int> ch1_closed_form_values(const SmcGroup& G, const Automorphism& phi);

/// (1/p) Σ_i gcd(γ - alpha^i, N) - gcd(γ - 1, alpha - 1, N) for φ(x) = x^γ;
/// falls back to chp_fixed_direct when φ moves C_N.
Int chp_fixed(const SmcGroup& G, const Automorphism& phi, Int budget);

/// Fixed p-dimensional characters by testing each dual orbit of size p.
Int chp_fixed_direct(const SmcGroup& G, const DualOrbits& orbits, const Automorphism& phi);

struct FixedCounts {
  Int ch1 = 0;
  Int chp = 0;
};

FixedCounts fixed_character_counts(const SmcGroup& G, const Abelianization& ab, const DualOrbits& orbits,
                                   const Automorphism& phi);

/// ch_{1,φ} + ch_{p,φ}.
Int reidemeister_via_characters(const SmcGroup& G, const Abelianization& ab, const DualOrbits& orbits,
                                const Automorphism& phi);
Int reidemeister_via_characters(const SmcGroup& G, const Automorphism& phi, Int budget);

}  // namespace smc

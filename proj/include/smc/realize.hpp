#pragma once

#include <string>
#include <vector>

#include "smc/autos.hpp"

namespace smc {

/// An automorphism built to realize one value of the closed-form spectrum.
struct Realization {
  Int predicted = 0;
  Automorphism phi;
  std::string family;
};

/// Constructs, for every value of spec_full(G), automorphisms predicted to
/// have that Reidemeister number: a gcd witness on the n-part merged by CRT
/// with a prescribed residue mod p^m, plus the special images of y and x used
/// by the individual cases. Every returned automorphism is validated.
std::vector<Realization> realize_spectrum(const SmcGroup& G);

}  // namespace smc

#pragma once

#include <vector>

#include "smc/group.hpp"

/// Closed-form Reidemeister spectra of split metacyclic groups.
namespace smc {

/// Sorts and deduplicates.
Spectrum normalize(std::vector<Int> values);

Spectrum set_product(const Spectrum& a, const Spectrum& b);
Spectrum set_sum(const Spectrum& a, const Spectrum& b);

/// Spectrum of the cyclic group C_n: all divisors for odd n, even divisors for even n.
Spectrum spec_cyclic(Int n);

using DivisorTuple = std::vector<Int>;

/// b-tuples of pairwise coprime divisors of a; with require3, only tuples
/// with an entry divisible by 3. Sorted lexicographically.
std::vector<DivisorTuple> divisor_tuples(Int a, Int b, bool require3);

/// Tuples used by the formulas for the given modulus: the mod-3 restriction
/// applies when p = 2 and 3 | n.
std::vector<DivisorTuple> formula_tuples(Int modulus, Int p, Int n);

Spectrum spec_trivial_ppart(Int n, int m, Int p);
Spectrum spec_nontrivial_ppart(Int n, int m, Int p, Int beta);
Spectrum spec_p2_inversion(Int n, int m);
Spectrum spec_p2_case2(Int n, int m);
Spectrum spec_pgroup(int m, Int p);

/// Spectrum of the freely acted part, by case.
Spectrum spec_case(Int n_free, int m, Int p, Int alpha);

/// Spectrum of any nontrivially acting split metacyclic group.
Spectrum spec_full(Int n, int m, Int p, Int alpha);
Spectrum spec_full(const SmcGroup& G);

}  // namespace smc

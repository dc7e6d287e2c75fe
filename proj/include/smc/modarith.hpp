#pragma once

#include <span>
#include <string>
#include <vector>

#include "smc/common.hpp"

/// Exact integer arithmetic: gcds, trial-division factorization, modular
/// units, CRT, and the gcd witnesses that realize spectrum values.
namespace smc::modarith {

__extension__ using Wide = __int128;

struct PrimePower {
  Int prime = 0;
  int exponent = 0;

  Int value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

struct Congruence {
  Int residue = 0;
  Int modulus = 1;
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// gcd(γ, n) = 1 and gcd(γ - a^i, n) = targets[i] for 0 <= i < p.
struct WitnessProblem {
  Int n = 1;
  Int p = 2;
  Int a = 0;
  std::vector<Int> targets;
};

// gcd(0, 0) = 0; result is always nonnegative.
Int gcd(Int a, Int b);
Int gcd(Int a, Int b, Int c);
Int lcm(Int a, Int b);

/// Canonical representative of a mod m in [0, m).
inline Int mod(Int a, Int m) {
  if (m <= 0) throw ValidationError("modulus must be positive, got " + std::to_string(m));
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int mul_mod(Int a, Int b, Int m) {
  const Wide r = static_cast<Wide>(mod(a, m)) * mod(b, m);
  return static_cast<Int>(r % m);
}

Int pow_mod(Int base, Int exp, Int m);
Int inverse_mod(Int a, Int m);
Int ipow(Int base, int exp);

bool is_prime(Int k);
Factorization factorize(Int k);
std::vector<Int> divisors(Int k);
int valuation(Int k, Int q);
Int euler_phi(Int k);

/// Solves a system with pairwise coprime moduli. The result carries the
/// product of the moduli as its modulus.
Congruence crt_solve(std::span<const Congruence> system);

/// Least t >= 1 with a^t = 1 mod k.
Int mult_order(Int a, Int k);

/// Throws ValidationError naming the first violated condition.
void validate(const WitnessProblem& problem);

/// True iff gamma satisfies every gcd condition of the problem.
bool is_witness(const WitnessProblem& problem, Int gamma);

/// γ mod n solving the problem, built by CRT from one congruence per prime
/// power of n. Validates first.
Int gcd_witness(const WitnessProblem& problem);

/// A unit γ mod n with gcd(γ - 1, n) = d. Requires d | n, and d even when n is even.
Int unit_with_fixed_gcd(Int n, Int d);

}  // namespace smc::modarith

#include "smc/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace smc::modarith {

Int PrimePower::value() const { return ipow(prime, exponent); }

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int gcd(Int a, Int b, Int c) { return std::gcd(std::gcd(a, b), c); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

Int pow_mod(Int base, Int exp, Int m) {
  if (exp < 0) return pow_mod(inverse_mod(base, m), -exp, m);
  Int result = mod(1, m);
  Int b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return result;
}

Int inverse_mod(Int a, Int m) {
  Int r0 = m, r1 = mod(a, m);
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1 && m != 1) {
    throw ValidationError(std::to_string(a) + " is not invertible mod " + std::to_string(m) +
                          " (gcd " + std::to_string(r0) + ")");
  }
  return mod(s0, m);
}

Int ipow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_prime(Int k) {
  if (k < 2) return false;
  for (Int q = 2; q * q <= k; ++q) {
    if (k % q == 0) return false;
  }
  return true;
}

Factorization factorize(Int k) {
  if (k <= 0) throw ValidationError("factorize: argument must be positive, got " + std::to_string(k));
  Factorization out;
  for (Int q = 2; q * q <= k; ++q) {
    if (k % q != 0) continue;
    int e = 0;
    while (k % q == 0) {
      k /= q;
      ++e;
    }
    out.push_back({q, e});
  }
  if (k > 1) out.push_back({k, 1});
  return out;
}

std::vector<Int> divisors(Int k) {
  std::vector<Int> out{1};
  for (const auto& [q, e] : factorize(k)) {
    const std::size_t size = out.size();
    Int power = 1;
    for (int i = 1; i <= e; ++i) {
      power *= q;
      for (std::size_t j = 0; j < size; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int valuation(Int k, Int q) {
  if (k == 0) throw ValidationError("valuation of 0 is undefined");
  if (q < 2) throw ValidationError("valuation base must be at least 2");
  k = k < 0 ? -k : k;
  int e = 0;
  while (k % q == 0) {
    k /= q;
    ++e;
  }
  return e;
}

Int euler_phi(Int k) {
  Int result = k;
  for (const auto& pp : factorize(k)) result = result / pp.prime * (pp.prime - 1);
  return result;
}

Congruence crt_solve(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const auto& c : system) {
    if (c.modulus <= 0) throw ValidationError("crt_solve: modulus must be positive");
    if (gcd(acc.modulus, c.modulus) != 1) {
      throw ValidationError("crt_solve: moduli " + std::to_string(acc.modulus) + " and " +
                            std::to_string(c.modulus) + " are not coprime");
    }
    // acc.residue + acc.modulus * t ≡ c.residue (mod c.modulus)
    const Int diff = mod(c.residue - acc.residue, c.modulus);
    const Int t = mul_mod(diff, inverse_mod(acc.modulus, c.modulus), c.modulus);
    const Int modulus = acc.modulus * c.modulus;
    acc.residue = mod(acc.residue + static_cast<Int>(static_cast<Wide>(acc.modulus) * t % modulus), modulus);
    acc.modulus = modulus;
  }
  return acc;
}

Int mult_order(Int a, Int k) {
  if (k <= 0) throw ValidationError("mult_order: modulus must be positive");
  if (gcd(mod(a, k), k) != 1) {
    throw ValidationError("mult_order: " + std::to_string(a) + " is not a unit mod " + std::to_string(k));
  }
  Int order = euler_phi(k);
  for (const auto& pp : factorize(order)) {
    while (order % pp.prime == 0 && pow_mod(a, order / pp.prime, k) == mod(1, k)) order /= pp.prime;
  }
  return order;
}

void validate(const WitnessProblem& pr) {
  if (pr.n < 1) throw ValidationError("witness: n must be positive");
  if (!is_prime(pr.p)) throw ValidationError("witness: p = " + std::to_string(pr.p) + " is not prime");
  if (pr.n % pr.p == 0) throw ValidationError("witness: p divides n");
  if (static_cast<Int>(pr.targets.size()) != pr.p) {
    throw ValidationError("witness: expected " + std::to_string(pr.p) + " targets, got " +
                          std::to_string(pr.targets.size()));
  }
  if (pr.n > 1) {
    if (gcd(mod(pr.a, pr.n), pr.n) != 1) throw ValidationError("witness: gcd(a, n) != 1");
    if (gcd(mod(pr.a - 1, pr.n), pr.n) != 1) throw ValidationError("witness: gcd(a - 1, n) != 1");
    if (pow_mod(pr.a, pr.p, pr.n) != 1) throw ValidationError("witness: a does not have order p mod n");
  }
  for (std::size_t i = 0; i < pr.targets.size(); ++i) {
    const Int d = pr.targets[i];
    if (d < 1 || pr.n % d != 0) {
      throw ValidationError("witness: target d_" + std::to_string(i) + " = " + std::to_string(d) +
                            " does not divide n");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gcd(d, pr.targets[j]) != 1) {
        throw ValidationError("witness: targets d_" + std::to_string(j) + " and d_" + std::to_string(i) +
                              " are not coprime");
      }
    }
  }
  if (pr.p == 2 && pr.n % 3 == 0 && (pr.targets[0] * pr.targets[1]) % 3 != 0) {
    throw ValidationError("witness: p = 2 and 3 | n require 3 | d_0 d_1");
  }
}

bool is_witness(const WitnessProblem& pr, Int gamma) {
  if (gcd(mod(gamma, pr.n), pr.n) != 1) return false;
  Int power = mod(1, pr.n);
  for (Int i = 0; i < pr.p; ++i) {
    if (gcd(mod(gamma - power, pr.n), pr.n) != pr.targets[i]) return false;
    power = mul_mod(power, pr.a, pr.n);
  }
  return true;
}

Int gcd_witness(const WitnessProblem& pr) {
  validate(pr);
  if (pr.n == 1) return 0;
  std::vector<Congruence> system;
  for (const auto& pp : factorize(pr.n)) {
    const Int qe = pp.value();
    Int residue = pr.p == 2 ? 3 : -1;
    for (Int i = 0; i < pr.p; ++i) {
      const Int d = pr.targets[i];
      if (d % pp.prime != 0) continue;
      residue = pow_mod(pr.a, i, qe) + ipow(pp.prime, valuation(d, pp.prime));
      break;
    }
    system.push_back({mod(residue, qe), qe});
  }
  const Int gamma = crt_solve(system).residue;
  if (!is_witness(pr, gamma)) throw std::logic_error("gcd_witness produced an invalid witness");
  return gamma;
}

Int unit_with_fixed_gcd(Int n, Int d) {
  if (n < 1 || d < 1 || n % d != 0) throw ValidationError("unit_with_fixed_gcd: d must divide n");
  if (n == 1) return 0;
  std::vector<Congruence> system;
  for (const auto& pp : factorize(n)) {
    const Int qe = pp.value();
    const int f = d % pp.prime == 0 ? valuation(d, pp.prime) : 0;
    if (f == 0 && pp.prime == 2) throw ValidationError("unit_with_fixed_gcd: even n needs even d");
    const Int residue = f == 0 ? qe - 1 : 1 + ipow(pp.prime, f);
    system.push_back({mod(residue, qe), qe});
  }
  return crt_solve(system).residue;
}

}  // namespace smc::modarith

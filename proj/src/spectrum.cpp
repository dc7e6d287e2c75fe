#include "smc/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "smc/modarith.hpp"

namespace smc {

namespace ma = modarith;

namespace {

// Every prime factor q of n must satisfy p | q - 1 for C_p to act freely on C_n.
void require_free_action_possible(Int n, Int p) {
  if (!ma::is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw ValidationError("n must be positive");
  if (n % p == 0) throw ValidationError("p divides n");
  for (const auto& pp : ma::factorize(n)) {
    if ((pp.prime - 1) % p != 0) {
      throw ValidationError("C_" + std::to_string(p) + " cannot act freely on C_" + std::to_string(n) +
                            ": prime factor " + std::to_string(pp.prime) + " is not 1 mod p");
    }
  }
}

Int exact_div(Int num, Int den) {
  if (num % den != 0) throw std::logic_error("inexact division in spectrum formula");
  return num / den;
}

Int sum_minus_one(const DivisorTuple& t) {
  Int s = 0;
  for (Int d : t) s += d - 1;
  return s;
}

// Σ (d_i - 1)/p with each term integral.
Int termwise_sum(const DivisorTuple& t, Int p) {
  Int s = 0;
  for (Int d : t) s += exact_div(d - 1, p);
  return s;
}

void assign_slots(const ma::Factorization& f, std::size_t k, DivisorTuple& current,
                  std::vector<DivisorTuple>& out) {
  if (k == f.size()) {
    out.push_back(current);
    return;
  }
  assign_slots(f, k + 1, current, out);
  for (auto& slot : current) {
    const Int saved = slot;
    for (int e = 1; e <= f[k].exponent; ++e) {
      slot *= f[k].prime;
      assign_slots(f, k + 1, current, out);
    }
    slot = saved;
  }
}

}  // namespace

Spectrum normalize(std::vector<Int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Spectrum set_product(const Spectrum& a, const Spectrum& b) {
  std::vector<Int> out;
  for (Int u : a)
    for (Int v : b) out.push_back(u * v);
  return normalize(std::move(out));
}

Spectrum set_sum(const Spectrum& a, const Spectrum& b) {
  std::vector<Int> out;
  for (Int u : a)
    for (Int v : b) out.push_back(u + v);
  return normalize(std::move(out));
}

Spectrum spec_cyclic(Int n) {
  if (n < 1) throw ValidationError("spec_cyclic: n must be positive");
  std::vector<Int> out;
  for (Int d : ma::divisors(n)) {
    if (n % 2 == 0 && d % 2 != 0) continue;
    out.push_back(d);
  }
  return out;
}

std::vector<DivisorTuple> divisor_tuples(Int a, Int b, bool require3) {
  if (a < 1 || b < 1) throw ValidationError("divisor_tuples: a and b must be positive");
  const auto f = ma::factorize(a);
  DivisorTuple current(static_cast<std::size_t>(b), 1);
  std::vector<DivisorTuple> out;
  assign_slots(f, 0, current, out);
  if (require3) {
    std::erase_if(out, [](const DivisorTuple& t) {
      return std::none_of(t.begin(), t.end(), [](Int d) { return d % 3 == 0; });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorTuple> formula_tuples(Int modulus, Int p, Int n) {
  return divisor_tuples(modulus, p, p == 2 && n % 3 == 0);
}

Spectrum spec_trivial_ppart(Int n, int m, Int p) {
  require_free_action_possible(n, p);
  if (n < 2) throw ValidationError("trivial p-part action needs n >= 2");
  if (m < 0) throw ValidationError("m must be nonnegative");
  std::vector<Int> out;
  for (const auto& t : formula_tuples(n, p, n)) {
    const Int s = termwise_sum(t, p);
    if (m == 0) {
      out.push_back(p + s);
      continue;
    }
    for (int e = p == 2 ? 1 : 0; e <= m; ++e) out.push_back(ma::ipow(p, e + 1) + ma::ipow(p, e) * s);
    out.push_back(ma::ipow(p, m) + ma::ipow(p, m) * s);
  }
  return normalize(std::move(out));
}

Spectrum spec_nontrivial_ppart(Int n, int m, Int p, Int beta) {
  require_free_action_possible(n, p);
  if (n < 2) throw ValidationError("nontrivial p-part action case needs n >= 2");
  if (m < 2 || (p == 2 && m < 3)) throw ValidationError("nontrivial p-part action needs m >= 2 (m >= 3 for p = 2)");
  if (ma::mod(beta, p) == 0) throw ValidationError("beta must be nonzero mod p");
  std::vector<Int> out;
  for (const auto& t : formula_tuples(n * p, p, n)) {
    const bool divisible = std::any_of(t.begin(), t.end(), [p](Int d) { return d % p == 0; });
    for (int e = p == 2 ? 1 : 0; e <= m - 1; ++e) {
      if (divisible != (e == m - 1)) continue;
      if (e == 0) {
        out.push_back(p + termwise_sum(t, p));
      } else {
        out.push_back(ma::ipow(p, e + 1) + ma::ipow(p, e - 1) * sum_minus_one(t));
      }
    }
  }
  return normalize(std::move(out));
}

Spectrum spec_p2_inversion(Int n, int m) {
  require_free_action_possible(n, 2);
  if (m < 2) throw ValidationError("inversion case needs m >= 2");
  std::vector<Int> inner;
  for (const auto& t : formula_tuples(n, 2, n)) {
    for (int e = 1; e <= m - 1; ++e) inner.push_back(ma::ipow(2, e) * t[0] + t[1] - 2);
  }
  return set_sum({2, 4}, normalize(std::move(inner)));
}

Spectrum spec_p2_case2(Int n, int m) {
  require_free_action_possible(n, 2);
  if (m < 3) throw ValidationError("second p = 2 case needs m >= 3");
  std::vector<Int> out;
  for (const auto& t : formula_tuples(n, 2, n)) {
    for (int e = 1; e <= m - 1; ++e) out.push_back(ma::ipow(2, e) * t[0] + t[1] + 2);
  }
  return normalize(std::move(out));
}

Spectrum spec_pgroup(int m, Int p) {
  if (!ma::is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  if (m < 2 || (p == 2 && m < 3)) throw ValidationError("p-group case needs m >= 2 (m >= 3 for p = 2)");
  std::vector<Int> out;
  for (int i = p == 2 ? 2 : 1; i <= m - 1; ++i) out.push_back(ma::ipow(p, i));
  out.push_back(2 * ma::ipow(p, m - 1) - ma::ipow(p, m - 2));
  out.push_back(ma::ipow(p, m) + ma::ipow(p, m - 1) - ma::ipow(p, m - 2));
  return normalize(std::move(out));
}

Spectrum spec_case(Int n_free, int m, Int p, Int alpha) {
  const CaseInfo info = classify_case(n_free, m, p, alpha);
  switch (info.tag) {
    case CaseTag::TrivialPPart: return spec_trivial_ppart(n_free, m, p);
    case CaseTag::NontrivialPPart: return spec_nontrivial_ppart(n_free, m, p, *info.beta);
    case CaseTag::P2Inversion: return spec_p2_inversion(n_free, m);
    case CaseTag::P2Case2: return spec_p2_case2(n_free, m);
    case CaseTag::PGroup: return spec_pgroup(m, p);
  }
  throw std::logic_error("unhandled case");
}

Spectrum spec_full(const SmcGroup& G) {
  const FixedPart& f = G.fixed_part();
  return set_product(spec_cyclic(f.h), spec_case(f.n_free, G.m(), G.p(), f.alpha_reduced));
}

Spectrum spec_full(Int n, int m, Int p, Int alpha) { return spec_full(SmcGroup(n, m, p, alpha)); }

}  // namespace smc

#include "smc/characters.hpp"

#include <algorithm>
#include <stdexcept>

#include "smc/modarith.hpp"

namespace smc {

namespace ma = modarith;

CyclotomicValue remove_zero_cycles(CyclotomicValue value, Int q) {
  const Int N = value.modulus;
  if (q < 2 || N % q != 0) throw ValidationError("remove_zero_cycles: q must divide the modulus");
  std::vector<Int> count(static_cast<std::size_t>(N), 0);
  for (Int e : value.exponents) ++count[ma::mod(e, N)];
  const Int step = N / q;
  for (Int c = 0; c < step; ++c) {
    Int full = count[c];
    for (Int j = 1; j < q; ++j) full = std::min(full, count[c + j * step]);
    for (Int j = 0; j < q; ++j) count[c + j * step] -= full;
  }
  value.exponents.clear();
  for (Int e = 0; e < N; ++e) value.exponents.insert(value.exponents.end(), count[e], e);
  return value;
}

namespace {

// Exact quotient of monic-divisor polynomial division.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Int> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Int c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(Int N) {
  if (N < 1) throw ValidationError("cyclotomic_polynomial: N must be positive");
  std::vector<Int> poly(static_cast<std::size_t>(N) + 1, 0);
  poly[0] = -1;
  poly[N] = 1;
  for (Int d : ma::divisors(N)) {
    if (d == N) continue;
    poly = divide_exact(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

bool cyclotomic_equal(const CyclotomicValue& a, const CyclotomicValue& b) {
  const Int L = ma::lcm(a.modulus, b.modulus);
  std::vector<Int> diff(static_cast<std::size_t>(L), 0);
  for (Int e : a.exponents) ++diff[ma::mod(e * (L / a.modulus), L)];
  for (Int e : b.exponents) --diff[ma::mod(e * (L / b.modulus), L)];
  const auto phi = cyclotomic_polynomial(L);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = diff.size(); i-- > deg;) {
    const Int c = diff[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) diff[i - deg + j] -= c * phi[j];
  }
  return std::all_of(diff.begin(), diff.end(), [](Int c) { return c == 0; });
}

DualOrbits dual_orbits(const SmcGroup& G, Int budget) {
  G.require_order_within(budget);
  const Int N = G.N();
  DualOrbits out;
  out.orbit_of.assign(static_cast<std::size_t>(N), -1);
  Int next = 0;
  for (Int a = 0; a < N; ++a) {
    if (out.orbit_of[a] >= 0) continue;
    Int size = 0;
    for (Int b = a; out.orbit_of[b] < 0; b = ma::mul_mod(b, G.alpha(), N)) {
      out.orbit_of[b] = next;
      ++size;
    }
    if (size == 1) {
      ++out.fixed_count;
    } else if (size == G.p()) {
      out.free_representatives.push_back(a);
    } else {
      throw std::logic_error("dual orbit of unexpected size " + std::to_string(size));
    }
    ++next;
  }
  return out;
}

CyclotomicValue induced_character_value(const SmcGroup& G, Int a, const GroupElement& g) {
  const Int N = G.N();
  a = ma::mod(a, N);
  if (ma::mul_mod(a, G.alpha(), N) == a) {
    throw ValidationError("exponent " + std::to_string(a) + " is fixed by the action and induces no p-dimensional character");
  }
  CyclotomicValue value{N, {}};
  if (g.y != 0) return value;
  for (Int i = 0; i < G.p(); ++i) {
    value.exponents.push_back(ma::mul_mod(ma::mul_mod(a, G.alpha_pow(i), N), g.x, N));
  }
  std::sort(value.exponents.begin(), value.exponents.end());
  return value;
}

Int linear_character_count(const SmcGroup& G) { return ma::gcd(G.alpha() - 1, G.N()) * G.p(); }

Int induced_character_count(const SmcGroup& G) { return (G.N() - ma::gcd(G.alpha() - 1, G.N())) / G.p(); }

Int ch1_fixed(const SmcGroup& G, const Abelianization& ab, const Automorphism& phi) {
  return abelianization_fixed_points(G, ab, phi);
}

Int ch1_fixed_dual(const SmcGroup& G, const Automorphism& phi) {
  const Int N = G.N(), p = G.p();
  const Int L = ma::lcm(N, p);
  const Int step = N / ma::gcd(G.alpha() - 1, N);
  auto value = [&](Int u, Int v, const GroupElement& g) {
    return ma::mod(ma::mul_mod(u, g.x, N) * (L / N) + (v * g.y % p) * (L / p), L);
  };
  Int fixed = 0;
  for (Int u = 0; u < N; u += step) {
    for (Int v = 0; v < p; ++v) {
      if (value(u, v, phi.img_x) == value(u, v, G.x()) && value(u, v, phi.img_y) == value(u, v, G.y())) ++fixed;
    }
  }
  return fixed;
}

std::vector<Int> ch1_closed_form_values(const SmcGroup& G, const Automorphism& phi) {
  const Int p = G.p(), pm = G.p_power();
  const int m = G.m();
  const Int h = G.fixed_part().h;
  const Int cyclic_part = ma::gcd(ma::mod(phi.img_x.x - 1, h), h);
  std::vector<Int> values;
  auto e_of = [&](Int gamma) {
    const Int g = ma::gcd(ma::mod(gamma - 1, pm), pm);
    return g == 0 ? m : ma::valuation(g, p);
  };
  switch (G.case_info().tag) {
    case CaseTag::TrivialPPart: {
      if (m == 0) {
        values = {p};
        break;
      }
      const int e = e_of(phi.img_x.x);
      if (e <= m - 1) {
        values = {ma::ipow(p, e + 1)};
      } else {
        values = {ma::mod(phi.img_y.x, pm) == 0 ? ma::ipow(p, m + 1) : ma::ipow(p, m)};
      }
      break;
    }
    case CaseTag::NontrivialPPart:
      values = {ma::ipow(p, std::min(m, e_of(phi.img_x.x) + 1))};
      break;
    case CaseTag::P2Inversion: values = {2, 4}; break;
    case CaseTag::P2Case2: values = {4}; break;
    case CaseTag::PGroup:
      for (int i = p == 2 ? 2 : 1; i <= m; ++i) values.push_back(ma::ipow(p, i));
      break;
  }
  for (Int& v : values) v *= cyclic_part;
  return values;
}

Int chp_fixed(const SmcGroup& G, const Automorphism& phi, Int budget) {
  if (!preserves_cyclic_part(phi)) return chp_fixed_direct(G, dual_orbits(G, budget), phi);
  const Int N = G.N(), p = G.p();
  const Int gamma = phi.img_x.x;
  Int sum = 0;
  for (Int i = 0; i < p; ++i) sum += ma::gcd(ma::mod(gamma - G.alpha_pow(i), N), N);
  if (sum % p != 0) throw std::logic_error("inexact division in fixed p-dimensional character count");
  return sum / p - ma::gcd(ma::mod(gamma - 1, N), ma::mod(G.alpha() - 1, N), N);
}

Int chp_fixed_direct(const SmcGroup& G, const DualOrbits& orbits, const Automorphism& phi) {
  const Int N = G.N(), p = G.p();
  Int fixed = 0;
  if (preserves_cyclic_part(phi)) {
    const Int gamma = phi.img_x.x;
    std::vector<Int> shifts;
    for (Int i = 0; i < p; ++i) shifts.push_back(ma::mod(gamma - G.alpha_pow(i), N));
    for (Int a : orbits.free_representatives) {
      for (Int s : shifts) {
        if (ma::mul_mod(a, s, N) == 0) {
          ++fixed;
          break;
        }
      }
    }
    return fixed;
  }
  // p-dimensional characters vanish off the centre <x^p>, so only φ(x^p) matters.
  if (G.case_info().tag != CaseTag::PGroup) {
    throw std::logic_error("automorphism moves C_N outside the p-group case");
  }
  const GroupElement image = apply(G, phi, {ma::mod(p, N), 0});
  if (image.y != 0) throw std::logic_error("image of x^p left C_N");
  for (Int a : orbits.free_representatives) {
    if (ma::mul_mod(a, ma::mod(image.x - p, N), N) == 0) ++fixed;
  }
  return fixed;
}

FixedCounts fixed_character_counts(const SmcGroup& G, const Abelianization& ab, const DualOrbits& orbits,
                                   const Automorphism& phi) {
  return {ch1_fixed(G, ab, phi), chp_fixed_direct(G, orbits, phi)};
}

Int reidemeister_via_characters(const SmcGroup& G, const Abelianization& ab, const DualOrbits& orbits,
                                const Automorphism& phi) {
  const auto counts = fixed_character_counts(G, ab, orbits, phi);
  return counts.ch1 + counts.chp;
}

Int reidemeister_via_characters(const SmcGroup& G, const Automorphism& phi, Int budget) {
  return reidemeister_via_characters(G, abelianization(G, budget), dual_orbits(G, budget), phi);
}

}  // namespace smc

#pragma once

#include <set>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "smc/autos.hpp"

namespace fixtures {

struct Params {
  smc::Int n;
  int m;
  smc::Int p;
  smc::Int alpha;
};

inline bool prime(smc::Int k) {
  if (k < 2) return false;
  for (smc::Int d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

// All valid parameter sets with n p^(m+1) <= max_order, enumerated directly.
inline std::vector<Params> small_groups(smc::Int max_order) {
  std::vector<Params> out;
  for (smc::Int p = 2; 2 * p <= max_order; ++p) {
    if (!prime(p)) continue;
    smc::Int pm = 1;
    for (int m = 0; pm * p <= max_order; ++m, pm *= p) {
      for (smc::Int n = 1; n * pm * p <= max_order; ++n) {
        if (n % p == 0) continue;
        const smc::Int N = n * pm;
        for (smc::Int a = 2; a < N; ++a) {
          if (std::gcd(a, N) == 1 && oracle::pw(a, p, N) == 1) out.push_back({n, m, p, a});
        }
      }
    }
  }
  return out;
}

inline oracle::Hom to_oracle(const oracle::Group& O, const smc::Automorphism& phi) {
  return {oracle::from_pair(O, phi.img_x.x, phi.img_x.y), oracle::from_pair(O, phi.img_y.x, phi.img_y.y)};
}

inline smc::Automorphism from_oracle(const oracle::Group& O, const oracle::Hom& h) {
  const auto [ax, bx] = oracle::to_pair(O, h.ix);
  const auto [ay, by] = oracle::to_pair(O, h.iy);
  return {{ax, bx}, {ay, by}};
}

inline std::set<smc::Int> as_set(const smc::Spectrum& s) { return {s.begin(), s.end()}; }

}  // namespace fixtures

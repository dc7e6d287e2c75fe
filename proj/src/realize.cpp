#include "smc/realize.hpp"

#include <algorithm>
#include <stdexcept>

#include "smc/modarith.hpp"
#include "smc/spectrum.hpp"

namespace smc {

namespace ma = modarith;

namespace {

// Automorphism of the freely acted factor, exponents mod n_free * p^m.
struct FreeWitness {
  Int value;
  GroupElement img_x;
  GroupElement img_y;
  std::string family;
};

Int crt2(Int r1, Int m1, Int r2, Int m2) {
  const ma::Congruence system[] = {{ma::mod(r1, m1), m1}, {ma::mod(r2, m2), m2}};
  return ma::crt_solve(system).residue;
}

std::string describe(const DivisorTuple& t, int e) {
  std::string s = "e=" + std::to_string(e) + " d=(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

class FreeBuilder {
 public:
  FreeBuilder(Int n_free, int m, Int p, Int alpha, const CaseInfo& info)
      : n_(n_free), m_(m), p_(p), pm_(ma::ipow(p, m)), alpha_n_(ma::mod(alpha, n_free)), info_(info) {}

  std::vector<FreeWitness> build() const {
    switch (info_.tag) {
      case CaseTag::TrivialPPart: return trivial_ppart();
      case CaseTag::NontrivialPPart: return nontrivial_ppart();
      case CaseTag::P2Inversion: return p2(true);
      case CaseTag::P2Case2: return p2(false);
      case CaseTag::PGroup: return pgroup();
    }
    throw std::logic_error("unhandled case");
  }

 private:
  Int n_;
  int m_;
  Int p_, pm_, alpha_n_;
  CaseInfo info_;

  Int gamma(const DivisorTuple& targets, Int residue_pm) const {
    const Int g1 = ma::gcd_witness({n_, p_, alpha_n_, targets});
    return crt2(g1, n_, residue_pm, pm_);
  }

  Int sum_minus_one(const DivisorTuple& t) const {
    Int s = 0;
    for (Int d : t) s += d - 1;
    return s;
  }

  std::vector<FreeWitness> trivial_ppart() const {
    std::vector<FreeWitness> out;
    for (const auto& t : formula_tuples(n_, p_, n_)) {
      const Int s = sum_minus_one(t) / p_;
      if (m_ == 0) {
        out.push_back({p_ + s, {gamma(t, 0), 0}, {0, 1}, "x->x^g " + describe(t, 0)});
        continue;
      }
      for (int e = p_ == 2 ? 1 : 0; e <= m_; ++e) {
        const Int g = gamma(t, 1 + ma::ipow(p_, e));
        out.push_back({ma::ipow(p_, e + 1) + ma::ipow(p_, e) * s, {g, 0}, {0, 1}, "x->x^g, y->y " + describe(t, e)});
        if (e == m_) {
          out.push_back({ma::ipow(p_, m_) + ma::ipow(p_, m_) * s, {g, 0}, {n_ * (pm_ / p_), 1},
                         "x->x^g, y->x^(n p^(m-1)) y " + describe(t, e)});
        }
      }
    }
    return out;
  }

  std::vector<FreeWitness> nontrivial_ppart() const {
    std::vector<FreeWitness> out;
    const Int slot = ma::inverse_mod(*info_.beta, p_);
    for (const auto& t : formula_tuples(n_ * p_, p_, n_)) {
      const auto hit = std::find_if(t.begin(), t.end(), [this](Int d) { return d % p_ == 0; });
      const bool divisible = hit != t.end();
      for (int e = p_ == 2 ? 1 : 0; e <= m_ - 1; ++e) {
        if (divisible != (e == m_ - 1)) continue;
        DivisorTuple arranged = t;
        if (divisible) std::swap(arranged[hit - t.begin()], arranged[slot]);
        DivisorTuple stripped = arranged;
        for (Int& d : stripped) {
          while (d % p_ == 0) d /= p_;
        }
        const Int value = e == 0 ? p_ + sum_minus_one(t) / p_
                                 : ma::ipow(p_, e + 1) + ma::ipow(p_, e - 1) * sum_minus_one(t);
        out.push_back({value, {gamma(stripped, 1 + ma::ipow(p_, e)), 0}, {0, 1}, "x->x^g, y->y " + describe(arranged, e)});
      }
    }
    return out;
  }

  std::vector<FreeWitness> p2(bool inversion) const {
    std::vector<FreeWitness> out;
    for (const auto& t : formula_tuples(n_, 2, n_)) {
      for (int e = 1; e <= m_ - 1; ++e) {
        const Int g = gamma(t, 1 + ma::ipow(2, e + 1));
        const Int base = ma::ipow(2, e) * t[0] + t[1];
        if (inversion) {
          out.push_back({base + 2, {g, 0}, {0, 1}, "x->x^g, y->y " + describe(t, e)});
          out.push_back({base, {g, 0}, {1, 1}, "x->x^g, y->xy " + describe(t, e)});
        } else {
          out.push_back({base + 2, {g, 0}, {0, 1}, "x->x^g, y->y " + describe(t, e)});
        }
      }
    }
    return out;
  }

  std::vector<FreeWitness> pgroup() const {
    std::vector<FreeWitness> out;
    for (int i = p_ == 2 ? 1 : 0; i <= m_ - 1; ++i) {
      const Int value = i <= m_ - 2 ? ma::ipow(p_, i + 1)
                                    : ma::ipow(p_, m_) + ma::ipow(p_, m_ - 1) - ma::ipow(p_, m_ - 2);
      out.push_back({value, {ma::ipow(p_, i) + 1, 0}, {0, 1}, "x->x^(p^" + std::to_string(i) + "+1), y->y"});
    }
    // for p = 2 the image x^(2^(m-1)+1) y gives 2^(m-1) instead
    const int k = p_ == 2 ? m_ - 2 : m_ - 1;
    out.push_back({2 * ma::ipow(p_, m_ - 1) - ma::ipow(p_, m_ - 2), {ma::ipow(p_, k) + 1, 1}, {0, 1},
                   "x->x^(p^" + std::to_string(k) + "+1) y, y->y"});
    return out;
  }
};

}  // namespace

std::vector<Realization> realize_spectrum(const SmcGroup& G) {
  const FixedPart& f = G.fixed_part();
  const Int M = f.n_free * G.p_power();
  const auto free = FreeBuilder(f.n_free, G.m(), G.p(), f.alpha_reduced, G.case_info()).build();
  // x = x_H x_free with x_H = x^eH and x_free = x^eM.
  const Int eH = crt2(1, f.h, 0, M);
  const Int eM = crt2(0, f.h, 1, M);
  const Int N = G.N();
  std::vector<Realization> out;
  for (Int d : spec_cyclic(f.h)) {
    const Int gh = ma::unit_with_fixed_gcd(f.h, d);
    for (const auto& w : free) {
      const GroupElement img_x{ma::mod(ma::mul_mod(eH, gh, N) + ma::mul_mod(eM, w.img_x.x, N), N), w.img_x.y};
      const GroupElement img_y{ma::mul_mod(eM, w.img_y.x, N), w.img_y.y};
      std::string family = w.family;
      if (f.h > 1) family += " times cyclic factor with gcd " + std::to_string(d);
      out.push_back({d * w.value, make_automorphism(G, img_x, img_y), family});
    }
  }
  return out;
}

}  // namespace smc

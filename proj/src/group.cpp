#include "smc/group.hpp"

#include <algorithm>
#include <deque>

#include "smc/modarith.hpp"
#include "union_find.hpp"

namespace smc {

namespace ma = modarith;

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::TrivialPPart: return "trivial-p-part";
    case CaseTag::NontrivialPPart: return "nontrivial-p-part";
    case CaseTag::P2Inversion: return "p2-inversion";
    case CaseTag::P2Case2: return "p2-case2";
    case CaseTag::PGroup: return "p-group";
  }
  return "unknown";
}

FixedPart fixed_subgroup_H(Int n, int m, Int p, Int alpha) {
  FixedPart out;
  for (const auto& pp : ma::factorize(n)) {
    const Int qe = pp.value();
    if (ma::mod(alpha - 1, qe) == 0) out.h *= qe;
  }
  out.n_free = n / out.h;
  out.alpha_reduced = ma::mod(alpha, out.n_free * ma::ipow(p, m));
  return out;
}

CaseInfo classify_case(Int n_free, int m, Int p, Int alpha) {
  if (!ma::is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  if (n_free < 1 || m < 0) throw ValidationError("n must be positive and m nonnegative");
  if (n_free % p == 0) throw ValidationError("p divides n");
  const Int pm = ma::ipow(p, m);
  const Int M = n_free * pm;
  const Int a = ma::mod(alpha, M);
  if (ma::gcd(a, M) != 1) throw ValidationError("alpha is not a unit mod " + std::to_string(M));
  if (ma::pow_mod(a, p, M) != ma::mod(1, M)) throw ValidationError("alpha^p is not 1 mod " + std::to_string(M));
  if (a == ma::mod(1, M)) throw ValidationError("trivial action: alpha is 1 mod " + std::to_string(M));
  if (ma::gcd(a - 1, n_free) != 1) throw ValidationError("action on C_n is not free");

  const Int a_pm = ma::mod(a, pm);
  if (a_pm == ma::mod(1, pm)) return {CaseTag::TrivialPPart, Int{0}};
  if (p == 2) {
    if (a_pm == pm - 1) return {CaseTag::P2Inversion, std::nullopt};
    if (m >= 3 && a_pm == pm / 2 - 1) return {CaseTag::P2Case2, std::nullopt};
    if (m >= 3 && a_pm == pm / 2 + 1) {
      return {n_free >= 2 ? CaseTag::NontrivialPPart : CaseTag::PGroup, Int{1}};
    }
    throw ValidationError("unclassifiable action on C_" + std::to_string(pm));
  }
  const Int step = pm / p;
  if (m < 2 || ma::mod(a_pm - 1, step) != 0) {
    throw ValidationError("unclassifiable action on C_" + std::to_string(pm));
  }
  const Int beta = (a_pm - 1) / step;
  return {n_free >= 2 ? CaseTag::NontrivialPPart : CaseTag::PGroup, beta};
}

SmcGroup::SmcGroup(Int n, int m, Int p, Int alpha) : n_(n), p_(p), m_(m) {
  if (n < 1) throw ValidationError("n must be positive");
  if (m < 0 || m > 62) throw ValidationError("m out of range");
  if (!ma::is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  if (n % p == 0) throw ValidationError("gcd(n, p) != 1");
  pm_ = ma::ipow(p, m);
  N_ = n * pm_;
  alpha_ = ma::mod(alpha, N_);
  if (ma::gcd(alpha_, N_) != 1) throw ValidationError("gcd(alpha, N) != 1");
  if (ma::pow_mod(alpha_, p, N_) != ma::mod(1, N_)) throw ValidationError("alpha^p is not 1 mod N");
  if (alpha_ == ma::mod(1, N_)) throw ValidationError("trivial action: alpha is 1 mod N");
  fixed_ = fixed_subgroup_H(n, m, p, alpha_);
  case_ = classify_case(fixed_.n_free, m, p, fixed_.alpha_reduced);
  if (p <= (Int{1} << 20)) {
    alpha_pows_.resize(static_cast<std::size_t>(p));
    Int v = ma::mod(1, N_);
    for (auto& slot : alpha_pows_) {
      slot = v;
      v = ma::mul_mod(v, alpha_, N_);
    }
    y_prefix_.assign(static_cast<std::size_t>(p) + 1, 0);
    for (Int j = 0; j < p; ++j) {
      y_prefix_[j + 1] = (y_prefix_[j] + alpha_pow(-j)) % N_;
    }
  }
}

Int SmcGroup::alpha_pow(Int j) const {
  j = ma::mod(j, p_);
  if (!alpha_pows_.empty()) return alpha_pows_[static_cast<std::size_t>(j)];
  return ma::pow_mod(alpha_, j, N_);
}

GroupElement SmcGroup::canonical(Int xexp, Int yexp) const { return {ma::mod(xexp, N_), ma::mod(yexp, p_)}; }

GroupElement SmcGroup::multiply(const GroupElement& g, const GroupElement& h) const {
  Int x = g.x + ma::mul_mod(h.x, alpha_pow(-g.y), N_);
  if (x >= N_) x -= N_;
  Int y = g.y + h.y;
  if (y >= p_) y -= p_;
  return {x, y};
}

GroupElement SmcGroup::inverse(const GroupElement& g) const {
  return {ma::mod(-ma::mul_mod(g.x, alpha_pow(g.y), N_), N_), ma::mod(-g.y, p_)};
}

GroupElement SmcGroup::power(const GroupElement& g, Int e) const {
  if (g.y == 0) return {ma::mul_mod(g.x, ma::mod(e, N_), N_), 0};
  if (g.y == 1 && e >= 0 && !y_prefix_.empty()) {
    // (c, 1)^(qp + r) = (c (q S_p + S_r), r) with S_r = sum_{j<r} alpha^-j
    const Int q = e / p_, r = e % p_;
    const Int s = (ma::mul_mod(q, y_prefix_.back(), N_) + y_prefix_[r]) % N_;
    return {ma::mul_mod(g.x, s, N_), r};
  }
  GroupElement base = e < 0 ? inverse(g) : g;
  if (e < 0) e = -e;
  GroupElement result = identity();
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

GroupElement SmcGroup::conjugate(const GroupElement& s, const GroupElement& g) const {
  return multiply(multiply(s, g), inverse(s));
}

Int SmcGroup::element_order(const GroupElement& g) const {
  if (g.y == 0) return N_ / ma::gcd(g.x, N_);
  const GroupElement gp = power(g, p_);
  return p_ * (N_ / ma::gcd(gp.x, N_));
}

Int SmcGroup::commutator_subgroup_order() const {
  const Int n_free = fixed_.n_free;
  switch (case_.tag) {
    case CaseTag::TrivialPPart: return n_free;
    case CaseTag::NontrivialPPart:
    case CaseTag::PGroup: return n_free * p_;
    case CaseTag::P2Inversion: return n_free * pm_ / 2;
    case CaseTag::P2Case2: return n_free * pm_ / 2;
  }
  return 0;
}

void SmcGroup::require_order_within(Int budget) const {
  if (order() > budget) {
    throw BudgetExceeded("group order " + std::to_string(order()) + " exceeds budget " + std::to_string(budget));
  }
}

std::vector<GroupElement> SmcGroup::commutator_subgroup_elements(Int budget) const {
  require_order_within(budget);
  const GroupElement c = multiply(multiply(x(), y()), multiply(inverse(x()), inverse(y())));
  std::vector<char> seen(static_cast<std::size_t>(order()), 0);

  std::vector<GroupElement> gens{c};
  std::deque<GroupElement> queue{c};
  seen[index(c)] = 1;
  while (!queue.empty()) {
    const GroupElement g = queue.front();
    queue.pop_front();
    for (const auto& s : {x(), y()}) {
      const GroupElement h = conjugate(s, g);
      if (!seen[index(h)]) {
        seen[index(h)] = 1;
        gens.push_back(h);
        queue.push_back(h);
      }
    }
  }

  std::fill(seen.begin(), seen.end(), 0);
  std::vector<GroupElement> members{identity()};
  queue.assign(1, identity());
  seen[index(identity())] = 1;
  while (!queue.empty()) {
    const GroupElement g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      const GroupElement h = multiply(g, s);
      if (!seen[index(h)]) {
        seen[index(h)] = 1;
        members.push_back(h);
        queue.push_back(h);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<GroupElement> SmcGroup::centre(Int budget) const {
  require_order_within(budget);
  std::vector<GroupElement> out;
  for (Int i = 0; i < order(); ++i) {
    const GroupElement g = element(i);
    if (multiply(x(), g) == multiply(g, x()) && multiply(y(), g) == multiply(g, y())) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConjugacyClasses conjugacy_classes(const SmcGroup& G, Int budget) {
  G.require_order_within(budget);
  const Int size = G.order();
  detail::UnionFind uf(static_cast<std::size_t>(size));
  for (Int i = 0; i < size; ++i) {
    const GroupElement g = G.element(i);
    uf.unite(static_cast<int>(i), static_cast<int>(G.index(G.conjugate(G.x(), g))));
    uf.unite(static_cast<int>(i), static_cast<int>(G.index(G.conjugate(G.y(), g))));
  }
  ConjugacyClasses out;
  out.class_of.assign(static_cast<std::size_t>(size), -1);
  std::vector<int> id_of_root(static_cast<std::size_t>(size), -1);
  for (Int i = 0; i < size; ++i) {
    const int root = uf.find(static_cast<int>(i));
    if (id_of_root[root] < 0) {
      id_of_root[root] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.class_of[i] = id_of_root[root];
    out.classes[id_of_root[root]].push_back(G.element(i));
  }
  for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
  return out;
}

}  // namespace smc

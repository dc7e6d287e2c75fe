#include "smc/autos.hpp"

#include <algorithm>
#include <set>

#include "smc/modarith.hpp"
#include "union_find.hpp"

namespace smc {

namespace ma = modarith;

namespace {

bool in_range(const SmcGroup& G, const GroupElement& g) {
  return g.x >= 0 && g.x < G.N() && g.y >= 0 && g.y < G.p();
}

// Whether target lies in the cyclic subgroup generated by g.
bool in_cyclic_subgroup(const SmcGroup& G, const GroupElement& g, const GroupElement& target) {
  if (g.y == 0) {
    if (target.y != 0) return false;
    return target.x % ma::gcd(g.x, G.N()) == 0;
  }
  // <g> = g^k0 <g^p> with g^p in C_N
  const Int k0 = ma::mul_mod(target.y, ma::inverse_mod(g.y, G.p()), G.p());
  const GroupElement rest = G.multiply(G.inverse(G.power(g, k0)), target);
  if (rest.y != 0) return false;
  const GroupElement gp = G.power(g, G.p());
  return rest.x % ma::gcd(gp.x, G.N()) == 0;
}

void require_aut_budget(Int count, const Budget& budget) {
  if (count > budget.automorphisms) {
    throw BudgetExceeded("automorphism count " + std::to_string(count) + " exceeds budget " +
                         std::to_string(budget.automorphisms));
  }
}

std::vector<Int> units_mod(Int N) {
  std::vector<Int> out;
  for (Int g = 1; g < N; ++g) {
    if (ma::gcd(g, N) == 1) out.push_back(g);
  }
  if (N == 1) out.push_back(0);
  return out;
}

}  // namespace

std::optional<std::string> automorphism_defect(const SmcGroup& G, const GroupElement& img_x,
                                               const GroupElement& img_y) {
  if (!in_range(G, img_x) || !in_range(G, img_y)) return "images are not canonical group elements";
  const Int ox = G.element_order(img_x);
  if (ox != G.N()) {
    return "image of x has order " + std::to_string(ox) + ", expected " + std::to_string(G.N());
  }
  if (G.power(img_y, G.p()) != G.identity()) return "image of y does not satisfy y^p = 1";
  const GroupElement lhs = G.multiply(G.multiply(G.inverse(img_y), img_x), img_y);
  if (lhs != G.power(img_x, G.alpha())) return "images violate y^-1 x y = x^alpha";
  if (in_cyclic_subgroup(G, img_x, img_y)) return "images do not generate G";
  return std::nullopt;
}

Automorphism make_automorphism(const SmcGroup& G, const GroupElement& img_x, const GroupElement& img_y) {
  if (auto defect = automorphism_defect(G, img_x, img_y)) throw ValidationError("invalid automorphism: " + *defect);
  return {img_x, img_y};
}

Automorphism identity_automorphism(const SmcGroup& G) { return {G.x(), G.y()}; }

GroupElement apply(const SmcGroup& G, const Automorphism& phi, const GroupElement& g) {
  return G.multiply(G.power(phi.img_x, g.x), G.power(phi.img_y, g.y));
}

Automorphism compose(const SmcGroup& G, const Automorphism& phi, const Automorphism& psi) {
  return {apply(G, phi, psi.img_x), apply(G, phi, psi.img_y)};
}

Automorphism compose_with_inner(const SmcGroup& G, const Automorphism& phi, const GroupElement& g) {
  return {G.conjugate(g, phi.img_x), G.conjugate(g, phi.img_y)};
}

bool has_structured_automorphisms(const SmcGroup& G) { return G.fixed_part().n_free >= 2; }

std::vector<Int> structured_y_offsets(const SmcGroup& G) {
  if (!has_structured_automorphisms(G)) {
    throw ValidationError("structured automorphisms need a nontrivial freely acted part of C_n");
  }
  std::vector<Int> out;
  for (Int a = 0; a < G.N(); ++a) {
    if (G.power({a, 1}, G.p()) == G.identity()) out.push_back(a);
  }
  return out;
}

Int automorphism_count(const SmcGroup& G, const Budget& budget) {
  if (has_structured_automorphisms(G)) {
    return ma::euler_phi(G.N()) * static_cast<Int>(structured_y_offsets(G).size());
  }
  return static_cast<Int>(enumerate_automorphisms_generic(G, budget).size());
}

std::vector<Automorphism> enumerate_automorphisms_structured(const SmcGroup& G, const Budget& budget) {
  G.require_order_within(budget.group_order);
  const auto offsets = structured_y_offsets(G);
  const auto units = units_mod(G.N());
  require_aut_budget(static_cast<Int>(units.size() * offsets.size()), budget);
  std::vector<Automorphism> out;
  out.reserve(units.size() * offsets.size());
  for (Int gamma : units) {
    for (Int a : offsets) {
      const GroupElement img_x{gamma, 0};
      const GroupElement img_y{a, 1};
      if (automorphism_defect(G, img_x, img_y)) continue;
      out.push_back({img_x, img_y});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Automorphism> enumerate_automorphisms_generic(const SmcGroup& G, const Budget& budget) {
  G.require_order_within(budget.group_order);
  std::vector<GroupElement> order_N, order_p;
  for (Int i = 0; i < G.order(); ++i) {
    const GroupElement g = G.element(i);
    const Int o = G.element_order(g);
    if (o == G.N()) order_N.push_back(g);
    if (o == G.p()) order_p.push_back(g);
  }
  std::vector<Automorphism> out;
  for (const auto& ix : order_N) {
    const GroupElement target = G.power(ix, G.alpha());
    for (const auto& iy : order_p) {
      if (G.multiply(G.multiply(G.inverse(iy), ix), iy) != target) continue;
      if (in_cyclic_subgroup(G, ix, iy)) continue;
      out.push_back({ix, iy});
      require_aut_budget(static_cast<Int>(out.size()), budget);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Automorphism> enumerate_automorphisms(const SmcGroup& G, const Budget& budget) {
  if (has_structured_automorphisms(G)) return enumerate_automorphisms_structured(G, budget);
  return enumerate_automorphisms_generic(G, budget);
}

namespace {

detail::UnionFind twisted_union_find(const SmcGroup& G, const Automorphism& phi, Int budget) {
  G.require_order_within(budget);
  const Int size = G.order();
  const GroupElement sx = G.x(), sy = G.y();
  const GroupElement inv_px = G.inverse(phi.img_x), inv_py = G.inverse(phi.img_y);
  detail::UnionFind uf(static_cast<std::size_t>(size));
  for (Int i = 0; i < size; ++i) {
    const GroupElement g = G.element(i);
    uf.unite(static_cast<int>(i), static_cast<int>(G.index(G.multiply(G.multiply(sx, g), inv_px))));
    uf.unite(static_cast<int>(i), static_cast<int>(G.index(G.multiply(G.multiply(sy, g), inv_py))));
  }
  return uf;
}

}  // namespace

TwistedClassPartition twisted_classes(const SmcGroup& G, const Automorphism& phi, Int budget) {
  auto uf = twisted_union_find(G, phi, budget);
  const Int size = G.order();
  TwistedClassPartition out;
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

Int twisted_class_count(const SmcGroup& G, const Automorphism& phi, Int budget) {
  return static_cast<Int>(twisted_union_find(G, phi, budget).components());
}

Int reidemeister_via_classes(const SmcGroup& G, const ConjugacyClasses& classes, const Automorphism& phi) {
  Int fixed = 0;
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    const GroupElement image = apply(G, phi, classes.classes[c].front());
    if (classes.class_of[G.index(image)] == static_cast<int>(c)) ++fixed;
  }
  return fixed;
}

Int reidemeister_via_classes(const SmcGroup& G, const Automorphism& phi, Int budget) {
  return reidemeister_via_classes(G, conjugacy_classes(G, budget), phi);
}

Abelianization abelianization(const SmcGroup& G, Int budget) {
  const auto K = G.commutator_subgroup_elements(budget);
  Abelianization out;
  out.commutator_order = static_cast<Int>(K.size());
  out.label.assign(static_cast<std::size_t>(G.order()), -1);
  for (Int i = 0; i < G.order(); ++i) {
    if (out.label[i] >= 0) continue;
    const GroupElement g = G.element(i);
    const int id = static_cast<int>(out.representatives.size());
    out.representatives.push_back(g);
    for (const auto& k : K) out.label[G.index(G.multiply(g, k))] = id;
  }
  return out;
}

Int abelianization_fixed_points(const SmcGroup& G, const Abelianization& ab, const Automorphism& phi) {
  Int fixed = 0;
  for (std::size_t r = 0; r < ab.representatives.size(); ++r) {
    const GroupElement image = apply(G, phi, ab.representatives[r]);
    if (ab.label[G.index(image)] == static_cast<int>(r)) ++fixed;
  }
  return fixed;
}

std::vector<Automorphism> automorphism_coset_representatives(const SmcGroup& G, const Budget& budget) {
  if (!has_structured_automorphisms(G)) return enumerate_automorphisms_generic(G, budget);
  G.require_order_within(budget.group_order);
  const auto offsets = structured_y_offsets(G);
  const auto units = units_mod(G.N());
  require_aut_budget(static_cast<Int>(units.size() * offsets.size()), budget);
  // τ_{x^k} shifts the offset by k(1 - alpha^-1), which ranges over gcd(alpha - 1, N) Z_N.
  const Int step = ma::gcd(G.alpha() - 1, G.N());
  std::vector<Automorphism> out;
  for (Int gamma : units) {
    for (Int a : offsets) {
      if (a >= step) break;
      out.push_back({{gamma, 0}, {a, 1}});
    }
  }
  return out;
}

Spectrum reidemeister_spectrum_bruteforce(const SmcGroup& G, const Budget& budget) {
  const auto classes = conjugacy_classes(G, budget.group_order);
  std::set<Int> values;
  for (const auto& phi : automorphism_coset_representatives(G, budget)) {
    values.insert(reidemeister_via_classes(G, classes, phi));
  }
  return {values.begin(), values.end()};
}

}  // namespace smc

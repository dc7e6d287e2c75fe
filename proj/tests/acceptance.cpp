// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smc/characters.hpp"
#include "smc/modarith.hpp"
#include "smc/realize.hpp"
#include "smc/spectrum.hpp"
#include "smc/sweep.hpp"

using smc::Int;
using smc::SmcGroup;

namespace {

const smc::Budget kBudget{1'000'000, 2'000'000};

struct Outcome {
  Int checked = 0;
  Int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

std::string name(const smc::GroupParams& g) {
  return "(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.m) + ", p=" + std::to_string(g.p) +
         ", alpha=" + std::to_string(g.alpha) + ")";
}

std::string show(const smc::Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

Int order(const smc::GroupParams& g) { return g.n * smc::modarith::ipow(g.p, g.m + 1); }

std::vector<smc::GroupParams> groups_up_to(const std::vector<smc::GroupParams>& all, Int limit) {
  std::vector<smc::GroupParams> out;
  for (const auto& g : all) {
    if (order(g) <= limit) out.push_back(g);
  }
  return out;
}

Outcome formula_matches_bruteforce(const std::vector<smc::GroupParams>& groups) {
  Outcome o;
  smc::SweepConfig config;
  config.budget = kBudget;
  std::vector<smc::GroupCheck> results(groups.size());
  smc::parallel_for(groups.size(), 0, [&](std::size_t i) { results[i] = smc::check_group(groups[i], config); });
  for (const auto& r : results) {
    ++o.checked;
    if (r.formula.empty() || r.formula != r.bruteforce) {
      o.fail(name(r.params) + ": formula " + show(r.formula) + " vs bruteforce " + show(r.bruteforce) + " " +
             r.failure);
    }
  }
  return o;
}

Outcome three_way_agreement(const std::vector<smc::GroupParams>& groups) {
  Outcome o;
  for (const auto& g : groups) {
    const SmcGroup G(g.n, g.m, g.p, g.alpha);
    const auto classes = smc::conjugacy_classes(G, kBudget.group_order);
    const auto ab = smc::abelianization(G, kBudget.group_order);
    const auto orbits = smc::dual_orbits(G, kBudget.group_order);
    for (const auto& phi : smc::enumerate_automorphisms(G, kBudget)) {
      ++o.checked;
      const Int twisted = smc::twisted_class_count(G, phi, kBudget.group_order);
      const Int fixed = smc::reidemeister_via_classes(G, classes, phi);
      const Int chars = smc::reidemeister_via_characters(G, ab, orbits, phi);
      if (twisted != fixed || fixed != chars) {
        o.fail(name(g) + ": twisted " + std::to_string(twisted) + ", classes " + std::to_string(fixed) +
               ", characters " + std::to_string(chars));
      }
    }
  }
  return o;
}

Outcome pinned_instances() {
  struct Pin {
    smc::GroupParams g;
    smc::Spectrum expected;
  };
  const std::vector<Pin> pins{{{5, 0, 2, 4}, {2, 4}},  {{15, 0, 2, 14}, {3, 5, 9}}, {{1, 2, 3, 4}, {3, 5, 11}},
                              {{1, 3, 2, 3}, {5, 7}},  {{1, 3, 2, 5}, {4, 6, 10}},  {{1, 2, 2, 3}, {3, 5}},
                              {{7, 0, 3, 2}, {3, 5}}};
  Outcome o;
  for (const auto& [g, expected] : pins) {
    ++o.checked;
    const SmcGroup G(g.n, g.m, g.p, g.alpha);
    const auto formula = smc::spec_full(G);
    const auto brute = smc::reidemeister_spectrum_bruteforce(G, kBudget);
    const auto independent = oracle::spectrum(oracle::Group(g.n, g.m, g.p, g.alpha));
    if (formula != expected || brute != expected || independent != fixtures::as_set(expected)) {
      o.fail(name(g) + ": expected " + show(expected) + ", formula " + show(formula) + ", bruteforce " + show(brute));
    }
  }
  return o;
}

Outcome cyclic_spectra() {
  Outcome o;
  for (Int n = 1; n <= 500; ++n) {
    ++o.checked;
    if (fixtures::as_set(smc::spec_cyclic(n)) != oracle::cyclic_spectrum(n)) {
      o.fail("n=" + std::to_string(n) + ": " + show(smc::spec_cyclic(n)));
    }
  }
  return o;
}

// A random valid problem: n a product of prime powers q^f with p | q - 1,
// a of order p with a != 1 mod every q, and each q^e (e <= f) sent to a slot.
smc::modarith::WitnessProblem random_witness_problem(std::mt19937_64& rng) {
  static const std::vector<Int> ps{2, 3, 5, 7};
  static const std::vector<Int> primes = [] {
    std::vector<Int> out;
    std::vector<char> composite(100'001, 0);
    for (Int q = 2; q <= 100'000; ++q) {
      if (composite[q]) continue;
      out.push_back(q);
      for (Int k = q * q; k <= 100'000; k += q) composite[k] = 1;
    }
    return out;
  }();
  for (;;) {
    const Int p = ps[rng() % ps.size()];
    Int n = 1, a = 0;
    std::vector<Int> d(static_cast<std::size_t>(p), 1);
    const Int limit = 1 + static_cast<Int>(rng() % 100'000);
    for (Int q : primes) {
      if (n * q > limit) break;
      if ((q - 1) % p != 0 || rng() % 3 != 0 || n * q > limit) continue;
      Int qf = q;
      int f = 1;
      while (rng() % 2 && n * qf * q <= limit) {
        qf *= q;
        ++f;
      }
      // element of order p mod q^f that is not 1 mod q
      const Int phi = qf / q * (q - 1);
      Int t = 1;
      while (t % q == 1 || t % q == 0) t = oracle::pw(2 + static_cast<Int>(rng() % (qf - 2)), phi / p, qf);
      // combine a (mod n) with t (mod qf)
      Int combined = t;
      while (combined % n != a % n) combined += qf;
      a = combined;
      n *= qf;
      d[rng() % d.size()] *= smc::modarith::ipow(q, static_cast<int>(rng() % (f + 1)));
    }
    if (n == 1) continue;
    if (p == 2 && n % 3 == 0 && d[0] % 3 != 0 && d[1] % 3 != 0) d[rng() % 2] *= 3;
    return {n, p, a, d};
  }
}

Outcome witness_property() {
  Outcome o;
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto problem = random_witness_problem(rng);
    ++o.checked;
    std::string desc = "n=" + std::to_string(problem.n) + " p=" + std::to_string(problem.p) +
                       " a=" + std::to_string(problem.a);
    try {
      const Int gamma = smc::modarith::gcd_witness(problem);
      bool ok = std::gcd(gamma, problem.n) == 1;
      Int power = 1;
      for (Int i = 0; i < problem.p; ++i) {
        ok = ok && std::gcd(oracle::md(gamma - power, problem.n), problem.n) == problem.targets[i];
        power = power * problem.a % problem.n;
      }
      if (!ok) o.fail(desc + ": gamma=" + std::to_string(gamma));
    } catch (const std::exception& ex) {
      o.fail(desc + ": " + ex.what());
    }
  }
  return o;
}

Outcome character_identities(const std::vector<smc::GroupParams>& groups) {
  Outcome o;
  for (const auto& g : groups) {
    ++o.checked;
    const SmcGroup G(g.n, g.m, g.p, g.alpha);
    const Int linear = smc::linear_character_count(G);
    const auto orbits = smc::dual_orbits(G, kBudget.group_order);
    const Int induced = static_cast<Int>(orbits.free_representatives.size());
    const Int index = G.order() / G.commutator_subgroup_generated(kBudget.group_order);
    if (linear != index || linear + g.p * g.p * induced != G.order()) {
      o.fail(name(g) + ": ch1 total " + std::to_string(linear) + ", [G:G'] " + std::to_string(index) +
             ", chp total " + std::to_string(induced));
      continue;
    }
    if (g.n != 1 || G.case_info().tag != smc::CaseTag::PGroup) continue;
    const Int all = smc::modarith::ipow(g.p, g.m - 2) * (g.p - 1);
    for (const auto& phi : smc::enumerate_automorphisms(G, kBudget)) {
      const Int chp = smc::chp_fixed_direct(G, orbits, phi);
      if (chp != 0 && chp != all) o.fail(name(g) + ": ch_p = " + std::to_string(chp));
    }
  }
  return o;
}

Outcome inner_invariance(const std::vector<smc::GroupParams>& groups) {
  Outcome o;
  for (const auto& g : groups) {
    const SmcGroup G(g.n, g.m, g.p, g.alpha);
    std::map<smc::Automorphism, Int> R;
    for (const auto& phi : smc::enumerate_automorphisms(G, kBudget)) {
      R[phi] = smc::twisted_class_count(G, phi, kBudget.group_order);
    }
    for (const auto& [phi, r] : R) {
      for (Int i = 0; i < G.order(); ++i) {
        ++o.checked;
        const auto it = R.find(smc::compose_with_inner(G, phi, G.element(i)));
        if (it == R.end() || it->second != r) o.fail(name(g) + ": inner twist changes R");
      }
    }
  }
  return o;
}

Outcome realizability(const std::vector<smc::GroupParams>& groups) {
  Outcome o;
  for (const auto& g : groups) {
    const SmcGroup G(g.n, g.m, g.p, g.alpha);
    std::set<Int> covered;
    for (const auto& r : smc::realize_spectrum(G)) {
      ++o.checked;
      const Int measured = smc::twisted_class_count(G, r.phi, kBudget.group_order);
      if (measured != r.predicted) {
        o.fail(name(g) + " " + r.family + ": predicted " + std::to_string(r.predicted) + ", measured " +
               std::to_string(measured));
      }
      covered.insert(r.predicted);
    }
    if (covered != fixtures::as_set(smc::spec_full(G))) o.fail(name(g) + ": spectrum values without witness");
  }
  return o;
}

bool report(int id, const std::string& title, const std::function<Outcome()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& ex) {
    o.fail(std::string("exception: ") + ex.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s [%d] %s: %lld checked, %lld failed (%.1f s)%s%s\n", o.failures == 0 ? "PASS" : "FAIL", id,
              title.c_str(), static_cast<long long>(o.checked), static_cast<long long>(o.failures), s,
              o.failures ? "; first: " : "", o.first_failure.c_str());
  std::fflush(stdout);
  return o.failures == 0;
}

}  // namespace

int main(int argc, char** argv) {
  // optional arguments select criteria by number
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const auto wanted = [&](int id) { return only.empty() || only.count(id) > 0; };
  const auto all = smc::sweep_parameters(2000);
  const auto upto500 = groups_up_to(all, 500);
  const auto upto200 = groups_up_to(all, 200);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form spectrum equals brute force, |G| <= 2000", [&] { return formula_matches_bruteforce(all); }},
      {"twisted classes = fixed classes = fixed characters, |G| <= 500", [&] { return three_way_agreement(upto500); }},
      {"pinned spectra", pinned_instances},
      {"cyclic spectra, n <= 500", cyclic_spectra},
      {"gcd witnesses for 1000 random problems", witness_property},
      {"character counts and p-group all-or-nothing, |G| <= 2000", [&] { return character_identities(all); }},
      {"R invariant under inner twists, |G| <= 200", [&] { return inner_invariance(upto200); }},
      {"realizing automorphisms hit every spectrum value, |G| <= 2000", [&] { return realizability(all); }}};
  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (wanted(id)) ok = report(id, criteria[i].first, criteria[i].second) && ok;
  }
  return ok ? 0 : 1;
}

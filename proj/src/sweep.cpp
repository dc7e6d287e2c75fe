#include "smc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "smc/autos.hpp"
#include "smc/characters.hpp"
#include "smc/modarith.hpp"
#include "smc/spectrum.hpp"

namespace smc {

namespace ma = modarith;

std::vector<Int> valid_alphas(Int n, int m, Int p) {
  if (!ma::is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  if (n < 1 || m < 0) throw ValidationError("n must be positive and m nonnegative");
  if (n % p == 0) throw ValidationError("gcd(n, p) != 1");
  const Int N = n * ma::ipow(p, m);
  std::vector<Int> out;
  for (Int a = 2; a < N; ++a) {
    if (ma::gcd(a, N) == 1 && ma::pow_mod(a, p, N) == 1) out.push_back(a);
  }
  return out;
}

std::vector<GroupParams> sweep_parameters(Int order_budget) {
  std::vector<GroupParams> out;
  for (Int p = 2; 2 * p <= order_budget; ++p) {
    if (!ma::is_prime(p)) continue;
    for (int m = 0; ma::ipow(p, m + 1) <= order_budget; ++m) {
      const Int base = ma::ipow(p, m + 1);
      for (Int n = 1; n * base <= order_budget; ++n) {
        if (n % p == 0) continue;
        for (Int alpha : valid_alphas(n, m, p)) out.push_back({n, m, p, alpha});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupParams& a, const GroupParams& b) {
    const Int oa = a.n * ma::ipow(a.p, a.m + 1), ob = b.n * ma::ipow(b.p, b.m + 1);
    if (oa != ob) return oa < ob;
    return a < b;
  });
  return out;
}

namespace {

std::string show(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string show(const Automorphism& phi) {
  return "x->(" + std::to_string(phi.img_x.x) + "," + std::to_string(phi.img_x.y) + ") y->(" +
         std::to_string(phi.img_y.x) + "," + std::to_string(phi.img_y.y) + ")";
}

}  // namespace

GroupCheck check_group(const GroupParams& params, const SweepConfig& config) {
  GroupCheck check;
  check.params = params;
  try {
    const SmcGroup G(params.n, params.m, params.p, params.alpha);
    check.case_name = to_string(G.case_info().tag);
    check.formula = spec_full(G);
    if (config.inject_fault && G.case_info().tag == CaseTag::PGroup) check.formula.back() += 1;
    check.bruteforce = reidemeister_spectrum_bruteforce(G, config.budget);

    const auto classes = conjugacy_classes(G, config.budget.group_order);
    const auto ab = abelianization(G, config.budget.group_order);
    const auto orbits = dual_orbits(G, config.budget.group_order);
    std::set<Int> via_characters;
    for (const auto& phi : automorphism_coset_representatives(G, config.budget)) {
      via_characters.insert(reidemeister_via_characters(G, ab, orbits, phi));
    }
    check.characters.assign(via_characters.begin(), via_characters.end());

    if (check.formula != check.bruteforce || check.bruteforce != check.characters) {
      check.ok = false;
      check.failure = "spectra differ: formula " + show(check.formula) + ", bruteforce " + show(check.bruteforce) +
                      ", characters " + show(check.characters);
      return check;
    }

    if (G.order() <= config.per_automorphism_limit) {
      for (const auto& phi : enumerate_automorphisms(G, config.budget)) {
        ++check.automorphisms_checked;
        const Int twisted = twisted_class_count(G, phi, config.budget.group_order);
        const Int fixed = reidemeister_via_classes(G, classes, phi);
        const Int chars = reidemeister_via_characters(G, ab, orbits, phi);
        bool ok = twisted == fixed && fixed == chars;
        if (ok && preserves_cyclic_part(phi)) {
          ok = chp_fixed(G, phi, config.budget.group_order) == chp_fixed_direct(G, orbits, phi);
        }
        if (!ok) {
          check.ok = false;
          check.failure = "automorphism " + show(phi) + ": twisted " + std::to_string(twisted) + ", fixed classes " +
                          std::to_string(fixed) + ", characters " + std::to_string(chars);
          return check;
        }
      }
    }
  } catch (const std::exception& ex) {
    check.ok = false;
    check.failure = ex.what();
  }
  return check;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

SweepSummary run_sweep(const std::vector<GroupParams>& params, const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<GroupCheck> results(params.size());
  parallel_for(params.size(), config.jobs, [&](std::size_t i) { results[i] = check_group(params[i], config); });

  SweepSummary summary;
  for (const auto& r : results) {
    ++summary.groups;
    summary.max_order = std::max(summary.max_order, r.params.n * ma::ipow(r.params.p, r.params.m + 1));
    if (r.ok) {
      ++summary.passed;
    } else {
      ++summary.failed;
      if (!summary.counterexample) summary.counterexample = r;
    }
  }
  summary.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace smc

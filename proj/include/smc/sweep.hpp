#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smc/group.hpp"

namespace smc {

struct GroupParams {
  Int n = 1;
  int m = 0;
  Int p = 2;
  Int alpha = 0;
  friend auto operator<=>(const GroupParams&, const GroupParams&) = default;
};

/// All alpha mod n p^m of multiplicative order exactly p.
std::vector<Int> valid_alphas(Int n, int m, Int p);

/// Every valid (n, m, p, alpha) with n p^(m+1) <= order_budget and
/// nontrivial action, in increasing (order, p, m, n, alpha) order.
std::vector<GroupParams> sweep_parameters(Int order_budget);

struct SweepConfig {
  Int order_budget = 2000;
  Budget budget{1'000'000, 2'000'000};
  /// Groups up to this order also get the per-automorphism comparison of
  /// twisted classes, fixed classes and fixed characters.
  Int per_automorphism_limit = 0;
  int jobs = 0;
  /// Test hook: perturbs one closed-form constant so the sweep must fail.
  bool inject_fault = false;
};

struct GroupCheck {
  GroupParams params;
  std::string case_name;
  Spectrum formula;
  Spectrum bruteforce;
  Spectrum characters;
  Int automorphisms_checked = 0;
  bool ok = true;
  std::string failure;
};

/// Formula vs brute force vs character spectra for one group.
GroupCheck check_group(const GroupParams& params, const SweepConfig& config);

struct SweepSummary {
  Int groups = 0;
  Int passed = 0;
  Int failed = 0;
  Int max_order = 0;
  std::optional<GroupCheck> counterexample;
  Int ms = 0;
};

/// Runs check_group over the parameter list, in parallel when jobs != 1.
/// Results are folded in parameter order.
SweepSummary run_sweep(const std::vector<GroupParams>& params, const SweepConfig& config);

/// Runs fn(i) for 0 <= i < count on up to `jobs` threads (0 = hardware).
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace smc

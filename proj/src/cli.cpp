#include "smc/cli.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "smc/autos.hpp"
#include "smc/characters.hpp"
#include "smc/modarith.hpp"
#include "smc/spectrum.hpp"

namespace smc::cli {

namespace ma = modarith;
using nlohmann::json;

json to_json(const ResultRecord& r) {
  json methods = json::object();
  for (const auto& [name, values] : r.methods) methods[name] = values;
  return {{"params",
           {{"n", r.params.n},
            {"m", r.params.m},
            {"p", r.params.p},
            {"alpha", r.params.alpha},
            {"alpha_mod_n", r.alpha_mod_n},
            {"alpha_mod_pm", r.alpha_mod_pm}}},
          {"case", r.case_name},
          {"spectrum", r.spectrum},
          {"methods", methods},
          {"agree", r.agree},
          {"ms", r.ms}};
}

ResultRecord record_from_json(const json& j) {
  ResultRecord r;
  const auto& p = j.at("params");
  r.params = {p.at("n").get<Int>(), p.at("m").get<int>(), p.at("p").get<Int>(), p.at("alpha").get<Int>()};
  r.alpha_mod_n = p.at("alpha_mod_n").get<Int>();
  r.alpha_mod_pm = p.at("alpha_mod_pm").get<Int>();
  r.case_name = j.at("case").get<std::string>();
  r.spectrum = j.at("spectrum").get<Spectrum>();
  for (const auto& [name, values] : j.at("methods").items()) r.methods[name] = values.get<Spectrum>();
  r.agree = j.at("agree").get<bool>();
  r.ms = j.at("ms").get<Int>();
  return r;
}

namespace {

struct Options {
  Int n = 1;
  int m = 0;
  Int p = 2;
  std::optional<Int> alpha;
  Int gamma = 1;
  Int a_img = 0;
  std::string method;
  std::optional<Int> budget;
  std::optional<Int> aut_budget;
  bool json = false;
  std::string out_file;
  int jobs = 0;
  Int triple_limit = 0;
  bool inject_fault = false;
  Int a = 0;
  std::vector<Int> d;
};

std::string show(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<std::string> spectrum_methods(const std::string& method) {
  if (method == "both") return {"formula", "bruteforce"};
  if (method == "all") return {"formula", "bruteforce", "characters"};
  return {method};
}

std::vector<std::string> reidemeister_methods(const std::string& method) {
  if (method == "both") return {"bruteforce", "characters"};
  if (method == "all") return {"formula", "bruteforce", "characters"};
  return {method};
}

Int elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

ResultRecord base_record(const SmcGroup& G) {
  ResultRecord r;
  r.params = {G.n(), G.m(), G.p(), G.alpha()};
  r.alpha_mod_n = ma::mod(G.alpha(), G.n());
  r.alpha_mod_pm = ma::mod(G.alpha(), G.p_power());
  r.case_name = to_string(G.case_info().tag);
  return r;
}

void finish_agreement(ResultRecord& r) {
  r.agree = true;
  for (const auto& [name, values] : r.methods) {
    if (values != r.methods.begin()->second) r.agree = false;
  }
  r.spectrum = r.methods.begin()->second;
}

std::string describe_group(const ResultRecord& r) {
  std::ostringstream s;
  s << "n=" << r.params.n << " m=" << r.params.m << " p=" << r.params.p << " alpha=" << r.params.alpha
    << " (mod n: " << r.alpha_mod_n << ", mod p^m: " << r.alpha_mod_pm << ") case " << r.case_name;
  return s.str();
}

void print_human(const ResultRecord& r, std::ostream& out) {
  out << describe_group(r) << "\n";
  for (const auto& [name, values] : r.methods) out << "  " << name << ": " << show(values) << "\n";
  if (r.methods.size() > 1) out << "  agree: " << (r.agree ? "yes" : "no") << "\n";
}

Budget single_budget(const Options& o) {
  return {o.budget.value_or(1'000'000), o.aut_budget.value_or(100'000)};
}

void require_positive_budget(const Budget& b) {
  if (b.group_order < 1 || b.automorphisms < 1) throw ValidationError("budgets must be at least 1");
}

ResultRecord spectrum_record(const SmcGroup& G, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  const Budget budget = single_budget(o);
  ResultRecord r = base_record(G);
  for (const auto& method : spectrum_methods(o.method)) {
    if (method == "formula") {
      r.methods[method] = spec_full(G);
    } else if (method == "bruteforce") {
      r.methods[method] = reidemeister_spectrum_bruteforce(G, budget);
    } else {
      const auto ab = abelianization(G, budget.group_order);
      const auto orbits = dual_orbits(G, budget.group_order);
      std::set<Int> values;
      for (const auto& phi : automorphism_coset_representatives(G, budget)) {
        values.insert(reidemeister_via_characters(G, ab, orbits, phi));
      }
      r.methods[method] = Spectrum(values.begin(), values.end());
    }
  }
  finish_agreement(r);
  r.ms = elapsed_ms(start);
  return r;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  require_positive_budget(single_budget(o));
  std::vector<ResultRecord> records;
  if (o.alpha) {
    records.push_back(spectrum_record(SmcGroup(o.n, o.m, o.p, *o.alpha), o));
  } else {
    const auto alphas = valid_alphas(o.n, o.m, o.p);
    if (alphas.empty()) throw ValidationError("no nontrivial action of C_p on C_N for these parameters");
    for (Int alpha : alphas) records.push_back(spectrum_record(SmcGroup(o.n, o.m, o.p, alpha), o));
  }
  if (o.json) {
    if (o.alpha) {
      out << to_json(records.front()).dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      out << arr.dump(2) << "\n";
    }
  } else {
    for (const auto& r : records) print_human(r, out);
  }
  bool agree = true;
  for (const auto& r : records) agree = agree && r.agree;
  return agree ? kOk : kDisagreement;
}

int cmd_reidemeister(const Options& o, std::ostream& out) {
  if (!o.alpha) throw ValidationError("--alpha is required");
  const auto start = std::chrono::steady_clock::now();
  const Budget budget = single_budget(o);
  require_positive_budget(budget);
  const SmcGroup G(o.n, o.m, o.p, *o.alpha);
  const Int g = ma::gcd(ma::mod(o.gamma, G.N()), G.N());
  if (g != 1) {
    throw ValidationError("gamma = " + std::to_string(o.gamma) + " is not a unit mod N = " + std::to_string(G.N()) +
                          ": gcd(gamma, N) = " + std::to_string(g));
  }
  const Automorphism phi =
      make_automorphism(G, {ma::mod(o.gamma, G.N()), 0}, {ma::mod(o.a_img, G.N()), 1});
  ResultRecord r = base_record(G);
  for (const auto& method : reidemeister_methods(o.method)) {
    Int value = 0;
    if (method == "formula") {
      value = ch1_fixed_dual(G, phi) + chp_fixed(G, phi, budget.group_order);
    } else if (method == "bruteforce") {
      value = twisted_class_count(G, phi, budget.group_order);
    } else {
      value = reidemeister_via_characters(G, phi, budget.group_order);
    }
    r.methods[method] = {value};
  }
  finish_agreement(r);
  r.ms = elapsed_ms(start);
  if (o.json) {
    json j = to_json(r);
    j["automorphism"] = {{"gamma", phi.img_x.x}, {"a_img", phi.img_y.x}};
    out << j.dump(2) << "\n";
  } else {
    out << describe_group(r) << "\n";
    out << "  automorphism x -> x^" << phi.img_x.x << ", y -> x^" << phi.img_y.x << " y\n";
    for (const auto& [name, values] : r.methods) out << "  R via " << name << ": " << values.front() << "\n";
    if (r.methods.size() > 1) out << "  agree: " << (r.agree ? "yes" : "no") << "\n";
  }
  return r.agree ? kOk : kDisagreement;
}

json check_to_json(const GroupCheck& c) {
  return {{"params", {{"n", c.params.n}, {"m", c.params.m}, {"p", c.params.p}, {"alpha", c.params.alpha}}},
          {"case", c.case_name},
          {"formula", c.formula},
          {"bruteforce", c.bruteforce},
          {"characters", c.characters},
          {"failure", c.failure}};
}

int cmd_verify(const Options& o, std::ostream& out) {
  SweepConfig config;
  config.order_budget = o.budget.value_or(2000);
  config.budget = {config.order_budget, o.aut_budget.value_or(2'000'000)};
  require_positive_budget(config.budget);
  config.per_automorphism_limit = o.triple_limit;
  config.jobs = o.jobs;
  config.inject_fault = o.inject_fault;
  const auto summary = run_sweep(sweep_parameters(config.order_budget), config);
  if (o.json) {
    json j = {{"groups", summary.groups},
              {"passed", summary.passed},
              {"failed", summary.failed},
              {"max_order", summary.max_order},
              {"counterexample", summary.counterexample ? check_to_json(*summary.counterexample) : json(nullptr)},
              {"ms", summary.ms}};
    out << j.dump(2) << "\n";
  } else {
    out << "groups: " << summary.groups << "\npassed: " << summary.passed << "\nfailed: " << summary.failed
        << "\nmax order: " << summary.max_order << "\ntime: " << summary.ms << " ms\n";
    if (summary.counterexample) {
      const auto& c = *summary.counterexample;
      out << "counterexample: n=" << c.params.n << " m=" << c.params.m << " p=" << c.params.p
          << " alpha=" << c.params.alpha << " case " << c.case_name << "\n  " << c.failure << "\n";
    }
  }
  return summary.failed == 0 ? kOk : kDisagreement;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const ma::WitnessProblem problem{o.n, o.p, o.a, o.d};
  const Int gamma = ma::gcd_witness(problem);
  json checks = json::array();
  Int power = ma::mod(1, o.n);
  for (Int i = 0; i < o.p; ++i) {
    checks.push_back({{"i", i},
                      {"a_power", power},
                      {"gcd", ma::gcd(ma::mod(gamma - power, o.n), o.n)},
                      {"target", o.d[static_cast<std::size_t>(i)]}});
    power = ma::mul_mod(power, o.a, o.n);
  }
  const bool valid = ma::is_witness(problem, gamma);
  if (o.json) {
    out << json{{"gamma", gamma}, {"gcd_gamma_n", ma::gcd(gamma, o.n)}, {"checks", checks}, {"valid", valid}}.dump(2)
        << "\n";
  } else {
    out << "gamma = " << gamma << "\n";
    out << "gcd(gamma, " << o.n << ") = " << ma::gcd(gamma, o.n) << "\n";
    for (const auto& c : checks) {
      out << "gcd(gamma - a^" << c["i"] << ", " << o.n << ") = gcd(gamma - " << c["a_power"] << ", " << o.n
          << ") = " << c["gcd"] << " (target " << c["target"] << ")\n";
    }
  }
  return valid ? kOk : kDisagreement;
}

int cmd_classify(const Options& o, std::ostream& out) {
  if (!o.alpha) throw ValidationError("--alpha is required");
  const SmcGroup G(o.n, o.m, o.p, *o.alpha);
  const auto& f = G.fixed_part();
  const auto& info = G.case_info();
  if (o.json) {
    json j = to_json(base_record(G));
    j.erase("spectrum");
    j.erase("methods");
    j.erase("agree");
    j.erase("ms");
    j["h"] = f.h;
    j["n_free"] = f.n_free;
    j["alpha_reduced"] = f.alpha_reduced;
    j["beta"] = info.beta ? json(*info.beta) : json(nullptr);
    j["commutator_order"] = G.commutator_subgroup_order();
    out << j.dump(2) << "\n";
  } else {
    out << describe_group(base_record(G)) << "\n";
    out << "  fixed part h = " << f.h << ", free part n = " << f.n_free << ", alpha reduced = " << f.alpha_reduced
        << "\n";
    if (info.beta) out << "  beta = " << *info.beta << "\n";
    out << "  |[G,G]| = " << G.commutator_subgroup_order() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reidemeister spectra of split metacyclic groups C_N x| C_p", "smcspec"};
  app.require_subcommand(1);

  const std::vector<std::string> method_names{"formula", "bruteforce", "characters", "both", "all"};
  auto add_group = [&](CLI::App* cmd, bool alpha_required) {
    cmd->add_option("--n", o.n, "order of the part of C_N coprime to p")->required();
    cmd->add_option("--m", o.m, "exponent of p in N")->required();
    cmd->add_option("--p", o.p, "prime order of the acting group")->required();
    auto* alpha = cmd->add_option("--alpha", o.alpha, "y^-1 x y = x^alpha, residue mod N");
    if (alpha_required) alpha->required();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "emit JSON");
    cmd->add_option("--out", o.out_file, "write output to FILE");
  };
  auto add_budgets = [&](CLI::App* cmd) {
    cmd->add_option("--budget", o.budget, "maximum group order");
    cmd->add_option("--aut-budget", o.aut_budget, "maximum number of automorphisms");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Reidemeister spectrum of a group (all alphas if omitted)");
  add_group(spectrum, false);
  spectrum->add_option("--method", o.method, "formula|bruteforce|characters|both|all")
      ->check(CLI::IsMember(method_names))
      ->default_str("formula");
  add_budgets(spectrum);
  add_output(spectrum);

  auto* reidemeister = app.add_subcommand("reidemeister", "R(phi) for phi: x -> x^gamma, y -> x^a y");
  add_group(reidemeister, true);
  reidemeister->add_option("--gamma", o.gamma, "image of x is x^gamma")->required();
  reidemeister->add_option("--a-img", o.a_img, "image of y is x^a y");
  reidemeister->add_option("--method", o.method, "formula|bruteforce|characters|both|all")
      ->check(CLI::IsMember(method_names))
      ->default_str("both");
  add_budgets(reidemeister);
  add_output(reidemeister);

  auto* verify = app.add_subcommand("verify", "compare formula, brute force and characters over all small groups");
  add_budgets(verify);
  verify->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  verify->add_option("--triple-limit", o.triple_limit, "per-automorphism check for groups up to this order");
  verify->add_flag("--inject-fault", o.inject_fault)->group("");
  add_output(verify);

  auto* witness = app.add_subcommand("witness", "gamma with gcd(gamma, n) = 1 and gcd(gamma - a^i, n) = d_i");
  witness->add_option("--n", o.n)->required();
  witness->add_option("--p", o.p)->required();
  witness->add_option("--a", o.a)->required();
  witness->add_option("--d", o.d, "targets d_0,...,d_(p-1)")->required()->delimiter(',');
  add_output(witness);

  auto* classify = app.add_subcommand("classify", "decomposition and case of a group");
  add_group(classify, true);
  add_output(classify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }
  if (o.method.empty()) o.method = reidemeister->parsed() ? "both" : "formula";

  std::ofstream file;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) {
      err << "error: cannot open " << o.out_file << "\n";
      return kValidation;
    }
  }
  std::ostream& sink = o.out_file.empty() ? out : file;

  try {
    if (spectrum->parsed()) return cmd_spectrum(o, sink);
    if (reidemeister->parsed()) return cmd_reidemeister(o, sink);
    if (verify->parsed()) return cmd_verify(o, sink);
    if (witness->parsed()) return cmd_witness(o, sink);
    return cmd_classify(o, sink);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kDisagreement;
  }
}

}  // namespace smc::cli

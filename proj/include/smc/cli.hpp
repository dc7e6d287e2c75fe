#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "smc/sweep.hpp"

namespace smc::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kDisagreement = 2, kBudgetExceeded = 3 };

struct ResultRecord {
  GroupParams params;
  Int alpha_mod_n = 0;
  Int alpha_mod_pm = 0;
  std::string case_name;
  Spectrum spectrum;
  std::map<std::string, Spectrum> methods;
  bool agree = true;
  Int ms = 0;
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

nlohmann::json to_json(const ResultRecord& record);
ResultRecord record_from_json(const nlohmann::json& j);

/// Entry point of the command-line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smc::cli

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sympcoh {

struct CheckResult {
  std::string check;
  bool pass = false;
  nlohmann::json witness;
};

/// Machine-readable verification report. JSON goes to stdout, a human table
/// to stderr; a suite passes iff every check passes.
struct Report {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CheckResult> checks;
  long long elapsed_ms = 0;

  void add(std::string check, bool pass, nlohmann::json witness = nullptr);
  bool all_pass() const;
  nlohmann::json to_json() const;
  void print_human(std::ostream& os) const;
};

}  // namespace sympcoh

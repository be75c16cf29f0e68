#include "sympcoh/report.hpp"

#include <algorithm>
#include <ostream>

namespace sympcoh {

void Report::add(std::string check, bool pass, nlohmann::json witness) {
  checks.push_back({std::move(check), pass, std::move(witness)});
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json entry = {{"check", c.check}, {"status", c.pass ? "pass" : "fail"}};
    entry["witness"] = c.witness;
    arr.push_back(std::move(entry));
  }
  return {{"suite", suite}, {"params", params}, {"checks", arr}, {"elapsed_ms", elapsed_ms}};
}

void Report::print_human(std::ostream& os) const {
  os << "suite " << suite << " (" << params.dump() << ")\n";
  for (const auto& c : checks)
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.check
       << (c.witness.is_null() ? "" : "  " + c.witness.dump()) << "\n";
  os << (all_pass() ? "  all checks passed" : "  SUITE FAILED") << " in " << elapsed_ms
     << " ms\n";
}

}  // namespace sympcoh

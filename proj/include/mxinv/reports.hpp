#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mxinv/gf.hpp"

namespace mxinv {

/// One verification entry. `status` is "pass", "fail" or "info"; info
/// entries record measured values with no asserted expectation and never
/// affect the exit code. `paper_claim` states the mathematical claim the
/// check decides, making reports self-documenting.
struct CheckResult {
  std::string check;
  std::string paper_claim;
  std::string status;
  nlohmann::ordered_json detail;
};

struct Report {
  int schema_version = 1;
  uint32_t q = 0, p = 0, s = 0;
  std::vector<uint32_t> modulus;  // empty for prime fields
  std::string group;
  std::string command;
  std::vector<CheckResult> results;
  bool verdict = true;  // true iff no result failed

  void add(CheckResult r);
};

nlohmann::ordered_json report_to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);
std::string report_table(const Report& r);

}  // namespace mxinv

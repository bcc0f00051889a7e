#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mxinv/reports.hpp"
#include "mxinv/structure.hpp"

namespace mxinv {

struct RunConfig {
  uint32_t q = 0;
  std::vector<uint32_t> modulus;  // empty = default
  std::string group;
  std::string command;
  std::optional<uint32_t> max_degree;      // command default when absent
  std::optional<uint32_t> search_degree;   // search only
  std::vector<std::string> primary_names;  // search only; empty = standard set
  Caps caps;
  uint32_t cap_q = 81;
};

/// Builds the report for one command. Throws std::invalid_argument /
/// std::runtime_error for invalid configurations and cap violations.
Report run_command(const RunConfig& cfg);

/// Full argv-level entry point: parses flags, dispatches, prints the table
/// or JSON to `out`. Exit status: 0 all checks verified, 1 a verification
/// failed, 2 invalid input or caps exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mxinv

#pragma once

// Named checks driven by JSON parameters, and suites of them.
// A suite is a JSON list of {"check": name, "params": {...}}.

#include <string>
#include <vector>

#include "npc/harness.hpp"
#include "npc/json_io.hpp"

namespace npc {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Names accepted by run_check.
const std::vector<std::string>& check_names();

/// Runs one named check. Throws UsageError for unknown names or bad parameters.
std::vector<CheckReport> run_check(const std::string& name, const Json& params);

/// Runs every entry; throws UsageError when the suite is empty or malformed.
std::vector<CheckReport> run_suite(const Json& suite);

/// The built-in suite used by `check all` when no suite file is given.
Json default_suite();

}  // namespace npc

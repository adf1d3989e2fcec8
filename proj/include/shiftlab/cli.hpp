#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace shiftlab::cli {

// Exit codes: 0 all assertions passed, 1 an assertion failed (e.g. no chain
// found), 2 parse or spec error.
struct RunResult {
  int exit_code = 0;
  nlohmann::json report;
};

// Executes one command line (without argv[0]).  Never throws; errors are
// folded into the report and exit code.
RunResult run(const std::vector<std::string>& args);

}  // namespace shiftlab::cli

#pragma once

#include <string>
#include <vector>

namespace hive {

/**
 * Run one CLI invocation. Subcommands: gen | validate | stats | gradcheck |
 * probability | lrc exact | lrc rounded | lrc lattice.
 * Exit codes: 0 ok, 2 usage, 3 numerical failure, 4 infeasible.
 */
int dispatch(std::vector<std::string> args);

}  // namespace hive

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quivoa {

// Runs one CLI invocation. Exit codes: 0 success, 1 domain error, 2 usage
// error. All randomized subcommands surface their seed in the output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivoa

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steiner {

// Batch front end. Subcommands: verify | hyperdet | eigen | figure | steiner.
// Returns the process exit status; all output goes to the given streams so
// tests can drive it in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steiner

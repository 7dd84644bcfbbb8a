#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace duval {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr unsigned long kDefaultSeed = 1000003;

// Routes to the subcommands (ec, certify, system, cubic, pencil,
// paper-suite). Returns the process exit code: 0 success, 1 failed
// certification, 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace duval

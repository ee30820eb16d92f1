#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepset {

inline constexpr const char* kVersion = "1.0.0";

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitInvalid = 2,  // parse, validation or usage error
  kExitBound = 3,    // some check skipped at a bound, under --strict-bounds
};

/// Entry point behind the executable; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepset

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cymirror {

enum ExitCode : int {
  exit_ok = 0,
  exit_inconsistent = 1,
  exit_usage = 2,
  exit_domain = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns one of the ExitCode values.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cymirror

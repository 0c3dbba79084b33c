#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steiner::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kPrecondition = 3,
  kBoundViolation = 4,
};

/// Runs one `steinerw` invocation. `args` excludes the program name. Exact
/// results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steiner::cli

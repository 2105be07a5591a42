#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pprev::cli {

/// Process exit statuses; stable for scripts.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kInternalError = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pprev::cli

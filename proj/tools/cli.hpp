#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitnorm::cli {

// Exit statuses. The three verdicts get their own codes so that `check` can
// be used directly in shell pipelines.
enum class ExitCode : int {
  kOk = 0,  // also: verdict Normal
  kInternal = 1,
  kInputError = 2,
  kCapacity = 3,
  kNotNormal = 10,
  kUndetermined = 11,
};

/// Runs the tool with `args` (without the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbitnorm::cli

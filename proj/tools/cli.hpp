#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bondtree::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDataFailure = 1,      // validation / reconcile failure, malformed input data
  kUsageError = 2,       // bad flags, missing paths, unknown ids, unwritable output
  kInvariantBreach = 3,  // coverage or complexity bound violated
};

// Built-in bundle name accepted wherever a bundle path is.
inline constexpr const char* kPaperBundle = "@paper";

// Runs one command line (args excludes the program name). Machine output goes
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bondtree::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eigenkit::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

/// Runs the command line; args excludes the program name. Reports go to `out`, diagnostics
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eigenkit::cli

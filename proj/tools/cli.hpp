#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vvmf::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kArgumentError = 2 };

/// Runs one invocation. args excludes the program name. Results go to out
/// (or to --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vvmf::cli

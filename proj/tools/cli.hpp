#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polarmm::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs the tool on argv (without the program name). Reports go to `out`,
/// usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarmm::cli

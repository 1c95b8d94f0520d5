#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tp3 {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kNotClassified = 3 };

// args excludes the program name. Reports go to out, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tp3

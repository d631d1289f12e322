#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lorhom::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kIndeterminate = 2, kUsage = 64 };

/// args excludes the program name. JSON report goes to out, a one-line
/// summary and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorhom::cli

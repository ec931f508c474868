#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace routeplan::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kNoFeasibleRoute = 3 };

/// Entry point behind the routeplan binary. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace routeplan::cli

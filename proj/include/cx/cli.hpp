#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cx::cli {

/// Runs one cxtool invocation. argv excludes the program name.
/// Exit codes: 0 pass/success, 1 check failed (with certificates),
/// 2 input or usage error.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace cx::cli

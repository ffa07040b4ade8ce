#pragma once

// Command-line dispatcher. Exit status 0 for accepted/true verdicts, 1 for
// rejected/false verdicts, 2 for input errors.

#include <ostream>
#include <string>
#include <vector>

#include "io.hpp"

namespace tropcvx::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a command's JSON report.
void render_pretty(const io::Json& report, std::ostream& out);

}  // namespace tropcvx::cli

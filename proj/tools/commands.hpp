#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ratlrc/error.hpp"

namespace ratlrc::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kDataError = 3;
constexpr int kTheoremViolation = 4;

int exit_code_for(Errc code);

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratlrc::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxdescent {

/// Exit codes of the command-line front end.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int not_strict = 1;
inline constexpr int usage = 2;
inline constexpr int semantic = 3;
inline constexpr int not_ci = 4;
inline constexpr int descent_failed = 5;
} // namespace exit_code

/// Runs `coxdescent <command> <file> [options]` with `args` excluding the
/// program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace coxdescent

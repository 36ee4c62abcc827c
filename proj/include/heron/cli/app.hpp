#pragma once

#include <ostream>
#include <span>
#include <string>

namespace heron::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
};

/// Environment variable naming the default --format.
inline constexpr const char* format_env_var = "HERONX_FORMAT";

/// Runs the tool. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace heron::cli

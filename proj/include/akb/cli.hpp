#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "akb/blocks.hpp"

namespace akb {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

/// Environment variable holding cap overrides, same syntax as --caps.
inline constexpr const char* kCapsEnv = "AKB_CAPS";

/// Applies "n=8,r=3,e=5,delta=6" (any subset, any order) on top of `base`.
/// InputError on unknown keys, negative values, r = 0 or e < 2.
Caps parse_caps(std::string_view text, Caps base = {});

/// Prints a diagnostic for a failure raised by a command and returns its exit
/// status. Exceptions of unknown type are rethrown.
int report_failure(std::exception_ptr failure, std::ostream& err);

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Documents go to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace akb

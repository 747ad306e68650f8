#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInconclusive = 3;

/// Runs one subcommand. args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glrank::cli

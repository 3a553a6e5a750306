#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace preclusion::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;          // feasible / pass
inline constexpr int kExitNegative = 1;    // infeasible / INFINITY / failed check
inline constexpr int kExitUsage = 2;       // usage or precondition error

// Runs the command line `args` (without the program name). Graph input is
// read from `in` unless a file path is given; reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace preclusion::cli

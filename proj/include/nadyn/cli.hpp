#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nadyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInconclusive = 10;

// Runs one command line (args excludes the program name). Data goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nadyn::cli

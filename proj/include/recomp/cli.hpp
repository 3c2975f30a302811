#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace recomp::cli {

// Exit codes: 0 success, 1 usage error or unmet precondition, 2 malformed or
// invalid sequence file, 3 structural miss during verify.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitStructuralMiss = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recomp::cli

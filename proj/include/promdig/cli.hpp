#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace promdig {

// Exit codes: 0 success, 1 theorem failure, 2 conjecture violation,
// 64 usage error, 65 input parse error, 70 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitTheoremFailure = 1;
inline constexpr int kExitConjectureViolation = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitInternal = 70;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace promdig

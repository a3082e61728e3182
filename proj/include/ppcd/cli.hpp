#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppcd {

// Exit statuses: 0 success, 1 a verification found a mismatch, 2 bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

inline constexpr int kVerifyBudget = 7;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppcd

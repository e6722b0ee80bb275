#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nefdual {

// Exit codes: 0 success or positive verdict, 1 well-formed input with a
// negative verdict, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nefdual

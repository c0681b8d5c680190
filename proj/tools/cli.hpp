#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace upsilon::cli {

// Exit codes: 0 success / property holds, 1 property check failed, 2 input error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// UPSILON_EXAMPLES_DIR if set, otherwise the bundled example directory.
std::string examples_dir();

}  // namespace upsilon::cli

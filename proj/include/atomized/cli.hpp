#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atomized::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Normal output goes to
/// `out` (or the `-o` file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atomized::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdelete::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapability = 3;
inline constexpr int kExitViolation = 4;

/// Runs one command; `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace kdelete::cli

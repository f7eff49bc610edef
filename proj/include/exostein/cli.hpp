#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exostein::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).  Returns 0 on success,
/// 1 when the computation ran but its check failed, 2 on usage/input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exostein::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbp::cli {

/// Exit codes: 0 success / true, 1 domain-negative result, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbp::cli

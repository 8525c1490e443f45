#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apparent::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit statuses: 0 success, 1 domain error (structured JSON error on `out`),
/// 2 usage, input or I/O error.
enum ExitStatus { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name; `in` backs the "-"
/// input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace apparent::cli

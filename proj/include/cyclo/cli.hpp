#pragma once

// Command-line front end. Exit status: 0 success, 1 campaign failure,
// 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(const std::string& s);

}  // namespace cyclo::cli

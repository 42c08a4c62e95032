#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kohn::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kUsage = 2;
inline constexpr int kPrecision = 3;

/// Runs one invocation. `args` excludes the program name. Output that is not
/// redirected with --out goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a lambda list: "a,b,c", a geometric range "lo:hi:xR" or an
/// arithmetic range "lo:hi:+D" (hi inclusive). Throws std::invalid_argument.
std::vector<double> parse_lambda_list(const std::string& text);

}  // namespace kohn::cli

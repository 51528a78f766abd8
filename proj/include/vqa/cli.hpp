#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vqa::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kRuntimeError = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "start:stop:step" (stop included when aligned) or a comma list "10,13,15".
std::vector<double> parse_axis(std::string_view text);

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vqa::cli

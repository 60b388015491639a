#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affsel::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;
inline constexpr int kCapacityOrTruncation = 2;

// Entry point of the `affsel` tool. Subcommands: generate, characterize,
// schedule, simulate, sweep.
int Main(int argc, char** argv, std::ostream& out, std::ostream& err);
int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "2..14", "2,4,6" or "5".
std::vector<std::size_t> ParseCountList(const std::string& text);

}  // namespace affsel::cli

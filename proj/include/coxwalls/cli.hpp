#pragma once

// The coxwalls command line: subcommands, cap resolution and reports.

#include <iosfwd>
#include <string>
#include <vector>

namespace coxwalls::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes: 0 success, 1 invalid input, 2 capped or undetermined result.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxwalls::cli

#pragma once

// Command-line driver. Exit codes: 0 ok, 1 verification failure, 2 invalid input.

#include <iosfwd>
#include <string>
#include <vector>

namespace chowla::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Arguments without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowla::cli

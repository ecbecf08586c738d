// Entry point of the command-line front end, separated from main() so tests
// can drive it in-process.

#pragma once

#include <string>

namespace coreg {

// Raised for malformed input (files, JSON, flags) as opposed to a
// computation rejecting well-formed input; mapped to exit code 2.
struct CliInputError {
  std::string message;
};

// Exit codes: 0 success, 1 computation error, 2 input or usage error.
int cli_main(int argc, const char* const* argv);

}  // namespace coreg

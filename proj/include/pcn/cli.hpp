#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pcn/gf.hpp"

namespace pcn::cli {

enum ExitCode : int {
  kOk = 0,
  kAssertionFailed = 1,
  kInvalidParameters = 2,
  kCapExceeded = 3,
};

/// Field element from a command-line token: a bare integer is an element
/// code, "-n" is the integer -n of the prime field, "g^e" (or "g") is a power
/// of the generator. Throws std::invalid_argument on anything else.
Element parse_constant(const Field& F, std::string_view token);

/// Runs one command. `argv[0]` is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same as above with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcn::cli

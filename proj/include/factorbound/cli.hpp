// Command-line surface. Kept as a library function so tests can drive the
// subcommands in-process and compare outputs against golden files.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace factorbound {

/// Exit codes: 0 success, 2 parse/usage error, 3 length cap exceeded,
/// 4 uncertified or non-exhaustive result, 5 certificate verification
/// failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace factorbound

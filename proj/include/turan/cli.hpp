#pragma once

#include <iosfwd>

namespace turan::cli {

/// Runs the command-line tool. Exit codes: 0 success, 1 domain error or
/// rejected certificate, 2 usage error or malformed input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace turan::cli

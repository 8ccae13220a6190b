#pragma once

#include <iosfwd>

namespace faultcalc {

/// Runs the command line. Exit codes: 0 success, 1 mismatch, law failure,
/// carrier violation or I/O error, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace faultcalc

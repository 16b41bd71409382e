#pragma once

#include <iosfwd>

namespace koszul {

/// Command line front end. Writes the JSON result to out and diagnostics to
/// err. Exit codes: 0 success, 2 validation or usage errors, 3 when the
/// Koszul assumption or an exactness check fails.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace koszul

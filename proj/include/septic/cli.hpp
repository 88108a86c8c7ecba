#pragma once

// The `septic` command surface. Exit codes: 0 success, 1 computation
// error, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace septic::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: argv[0] is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Golden-vector self check; returns the number of failures.
int selftest(std::ostream& out);

}  // namespace septic::cli

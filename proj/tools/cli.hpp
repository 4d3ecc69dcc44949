#pragma once

#include <iosfwd>

namespace mcdm::cli {

// Runs one command line. Exit codes: 0 success, 1 domain or validation error,
// 2 usage error. Errors are written to `err` as a single "error: ..." line.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mcdm::cli

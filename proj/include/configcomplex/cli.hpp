#pragma once

#include <iosfwd>

namespace configcomplex::cli {

// Exit codes: 0 success, 1 validation or verification failure, 2 usage or
// I/O error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace configcomplex::cli

// Command-line front end. Exit codes: 0 success, 1 audit failure, 2 usage or
// input error.
#pragma once

#include <iosfwd>

namespace cubictk::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cubictk::cli

#pragma once

#include <iosfwd>

namespace fds {

enum ExitCode { kOk = 0, kInputError = 1, kInfeasible = 2, kViolation = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fds

#pragma once

#include <iosfwd>

namespace mz {

// exit codes: 0 all checks passed, 1 a check failed, 2 usage
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace mz

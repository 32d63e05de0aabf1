#pragma once

#include <ostream>

namespace tiltlab {

// Exit codes: 0 success, 1 validation failure, 2 computational error,
// 3 I/O, syntax or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tiltlab

#pragma once

#include <ostream>

namespace qkgr::cli {

// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or evaluation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qkgr::cli

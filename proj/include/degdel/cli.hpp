// fbsolve command line. Exit codes: 0 yes/ok, 1 no, 2 error.
#pragma once

#include <iosfwd>

namespace degdel {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace degdel

#pragma once

#include <iosfwd>

namespace match_ybo {

// Exit codes: 0 success, 1 verification failure, 2 malformed input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace match_ybo

#pragma once

#include <iosfwd>

namespace hookdg {

// exit codes: 0 pass, 1 property failure or internal error, 2 usage or parse error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hookdg

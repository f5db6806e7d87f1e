#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotkit {

// Runs one command-line invocation (arguments without the program name).
// Exit codes: 0 success, 1 domain error (bad input values, unattainable
// computation), 2 usage error (unknown flags, malformed invocation).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotkit

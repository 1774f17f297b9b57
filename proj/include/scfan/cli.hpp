#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scfan {

// Runs one CLI invocation (arguments without the program name).
// Exit codes: 0 check passed / construction succeeded, 1 negative verdict on
// valid input, 2 malformed input or usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scfan

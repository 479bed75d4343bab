#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gk::cli {

// Runs one gkcheck invocation (args exclude the program name). Exit codes:
// 0 success, 1 verify did not verify (or selftest failed), 2 invalid
// request, 3 computation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gk::cli

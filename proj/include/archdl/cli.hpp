#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace archdl {

// Runs one CLI invocation. `args` excludes the program name. Exit codes:
// 0 success, 1 error-severity diagnostics found, 2 usage/file/parse failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace archdl

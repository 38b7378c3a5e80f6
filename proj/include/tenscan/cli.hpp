#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tenscan {

// Runs one command. `args` excludes the program name. Results go to `out` as
// JSON, diagnostics to `err` as a JSON error object. Returns the exit status:
// 0 success, 1 parse error, 2 precondition violation, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tenscan

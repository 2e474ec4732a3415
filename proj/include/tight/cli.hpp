#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tight {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 domain error, 2 resource limit, 3 parse error, 4 internal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tight

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metalie::cli {

/// Runs one command line (without the program name). Returns 0 on
/// success, 2 on input errors and 3 when a resource cap is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metalie::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ghgeom {

/// Full command-line driver, factored out of main() so tests can invoke it
/// in-process. `args` excludes the program name. Returns the process exit
/// code: 0 success, 1 verification failures, 2 usage or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghgeom

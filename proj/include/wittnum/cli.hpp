#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wittnum {

// Entry point behind the command-line binary. args excludes the program
// name. Exit status: 0 success, 1 validation or consistency failure (the
// report is still emitted), 2 usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittnum

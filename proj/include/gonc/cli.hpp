#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gonc {

// Runs one CLI request (args exclude the program name). Results go to `out`,
// diagnostics to `err`. Returns 0 on success / all checks passed, 1 on a
// verification or cross-check failure, 2 on a usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gonc

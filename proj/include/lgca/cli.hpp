#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lgca {

// Entry point behind the lgca binary, callable in-process for tests. args is
// the command line without the program name. Returns the exit status: 0 on
// success, 1 when a computation or verdict fails, 2 when input cannot be
// parsed (a graph file, a set, a term expression, or the command line).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lgca

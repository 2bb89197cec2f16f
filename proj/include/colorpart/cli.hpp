#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colorpart {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_input = 2, exit_internal = 3 };

// args excludes the program name. Results go to out; diagnostics go to err
// as one JSON object per line.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colorpart

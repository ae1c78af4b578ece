#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphlines::cli {

/// Runs the command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 an applicable claim failed, 2 usage or input error.
auto run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) -> int;

} // namespace graphlines::cli

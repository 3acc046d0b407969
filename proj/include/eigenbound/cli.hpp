#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eigenbound::cli {

enum ExitCode : int {
  ok = 0,
  parse_error = 2,
  unsupported = 3,
  violation = 4,
  infeasible = 5,
};

/// Runs the `eigenbound` command line (argv[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "%.12g", the precision used for every number in CSV and JSON output.
std::string format_number(double value);

}  // namespace eigenbound::cli

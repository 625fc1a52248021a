#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace roborun::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,           // success; for `run`, the goal was reached
  kInternal = 1,     // I/O or internal failure
  kInvalid = 2,      // parse or validation diagnostics, malformed arguments
  kNotReached = 3,   // ran, but no goal (crash, ended, step limit, unsolvable)
};

// Runs one command line. args[0] is the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace roborun::cli

#pragma once

#include <string>
#include <vector>

namespace logcone {

// Outcome of one command: process exit code, stdout payload, stderr payload.
struct CliResult {
  int code = 0;
  std::string output;
  std::string err;
};

// Runs one command given the arguments after the program name.
// Exit codes: 0 all checks pass, 1 a check failed or errored, 2 input or
// usage error, 3 size-guard rejection.
CliResult run_command(const std::vector<std::string>& args);

// Parses argv, runs the command, writes stdout and stderr, returns the code.
int run_cli(int argc, char** argv);

// Names of the library operations reachable from the dispatch table, sorted.
std::vector<std::string> covered_operations();

}  // namespace logcone

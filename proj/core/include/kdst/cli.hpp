#pragma once

#include <string>
#include <vector>

namespace kdst {

// Outcome of one CLI invocation. stdout carries the report (JSON with
// --json, plain text otherwise) and is deterministic for a fixed seed;
// timing and errors go to stderr.
struct CliResult {
  int exit_code = 0;  // 0 ok, 1 infeasible, 2 usage error, 3 internal failure
  std::string out;
  std::string err;
};

// Subcommands: solve, exact, check, augment, gen, lpbound. args excludes
// the program name.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace kdst

#pragma once

namespace infconv {

// Parses argv and dispatches one subcommand. Exit codes:
//   0  success / theorem holds
//   1  input invariant violation
//   2  parse error (file or command line)
//   3  theorem check failed (report carries the witness)
//   4  hypothesis unmet (e.g. non-invariant law for an invariance theorem)
int run_cli(int argc, char** argv);

}  // namespace infconv

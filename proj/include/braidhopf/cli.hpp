#ifndef BRAIDHOPF_CLI_HPP
#define BRAIDHOPF_CLI_HPP

#include <iosfwd>

namespace braidhopf {

/// Exit codes: 0 when every check passed, 1 when a check failed, 2 on a usage
/// or input error.
enum ExitCode { exit_pass = 0, exit_fail = 1, exit_input_error = 2 };

/// Runs one command line. Reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braidhopf

#endif

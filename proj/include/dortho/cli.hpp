#ifndef DORTHO_CLI_HPP
#define DORTHO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dortho::cli {

/// Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input.
enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

/// Runs one subcommand (eigen, verify, classify, duals). `args` excludes the
/// program name. JSON goes to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dortho::cli

#endif

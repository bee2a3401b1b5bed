#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mulprob::cli {

enum ExitCode : int { ok = 0, domain_error = 1, parse_error = 2 };

// Runs one command; `args` excludes the program name. Results go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on a domain or resource error
// (or a failed check), 2 on a parse error or malformed command line.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mulprob::cli

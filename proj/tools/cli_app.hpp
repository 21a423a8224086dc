#ifndef JACSPEC_CLI_APP_HPP
#define JACSPEC_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace jacspec::cli {

/// Dispatches one CLI invocation. args excludes the program name. JSON goes
/// to out, usage errors to err. Exit codes: 0 success, 1 numerical/domain
/// failure (a {"kind","detail"} object is printed), 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace jacspec::cli

#endif  // JACSPEC_CLI_APP_HPP

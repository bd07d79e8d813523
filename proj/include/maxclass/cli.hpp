#ifndef MAXCLASS_CLI_HPP_
#define MAXCLASS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace maxclass {

// Runs the command-line interface on the given arguments (without the
// program name).  Data goes to `out`, diagnostics and progress to `err`.
// Exit status: 0 success, 1 verification mismatch, 2 usage error,
// 3 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace maxclass

#endif  // MAXCLASS_CLI_HPP_

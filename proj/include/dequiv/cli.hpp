#ifndef DEQUIV_CLI_HPP_
#define DEQUIV_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace dequiv {

/// Runs the command line front end. args excludes the program name.
/// Exit codes: 0 success, 1 verification failure or ambiguous result,
/// 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dequiv

#endif  // DEQUIV_CLI_HPP_

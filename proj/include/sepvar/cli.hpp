#ifndef SEPVAR_CLI_HPP
#define SEPVAR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sepvar {

// Runs one CLI request; args exclude the program name.
// Exit codes: 0 ok, 2 bad input, 3 cross-check failure or internal mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepvar

#endif

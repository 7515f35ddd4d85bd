#ifndef PSCI_TOOLS_CLI_HPP
#define PSCI_TOOLS_CLI_HPP

#include <iosfwd>

namespace psci::cli {

/// Exit codes: 0 all checks passed, 1 a check failed, 2 invalid input.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace psci::cli

#endif  // PSCI_TOOLS_CLI_HPP

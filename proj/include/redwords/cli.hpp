#ifndef REDWORDS_CLI_HPP
#define REDWORDS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace redwords {

// Dispatches one subcommand. Exit status: 0 on success or a passing
// verification, 1 on a verification failure, 2 on a usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redwords

#endif

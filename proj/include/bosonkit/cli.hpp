#ifndef BOSONKIT_CLI_HPP
#define BOSONKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bosonkit::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_resource_cap = 3,
};

// args excludes the program name. Never returns a code outside ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bosonkit::cli

#endif

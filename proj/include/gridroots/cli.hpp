#ifndef GRIDROOTS_CLI_HPP
#define GRIDROOTS_CLI_HPP

#include <string>
#include <vector>

namespace gridroots {

// Full command-line front end. Exit codes: 0 success, 1 usage or input
// shape error, 2 computation error, 3 internal invariant violation.
int run_cli(int argc, const char* const* argv);
// Same, from bare arguments without the program name; used by tests.
int run_cli(const std::vector<std::string>& args);

}  // namespace gridroots

#endif

#ifndef SUBHIT_CLI_HPP
#define SUBHIT_CLI_HPP

#include <iosfwd>

namespace subhit {

// Command line driver, separated from main() so tests can run it against
// string streams. Exit codes: 0 success, 1 runtime failure or failed
// validation, 2 usage or input errors, 3 unsupported pattern, 4 oracle
// disagreement.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace subhit

#endif

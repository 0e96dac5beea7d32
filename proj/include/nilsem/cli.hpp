#ifndef NILSEM_CLI_HPP
#define NILSEM_CLI_HPP

#include <iosfwd>

namespace nilsem {

// Command-line front end. Exit codes: 0 success, 1 domain error (parse
// failure, axiom violation, bad arguments), 2 budget exceeded, 3 a verified
// law failed (falsification) or an internal consistency check tripped.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilsem

#endif

#pragma once
// Command line driver behind the qhs binary.  Subcommands: check, betti,
// symmetries, enumerate, construct, audit.  Exit codes: 0 for an affirmative
// verdict or a nonempty result, 1 for a negative verdict, 2 for usage or
// input errors.  Output is byte deterministic for fixed inputs, whatever the
// thread count.

#include <iosfwd>
#include <string>
#include <vector>

namespace qhs {

// args are the program arguments without the binary name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhs

#ifndef QSL_CLI_HPP
#define QSL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qsl {

// Runs one CLI invocation; `args` excludes the program name.
//
// Exit codes: 0 success (including "indistinguishable" and all checks
// passing), 2 when a separating witness is found or a check fails, 1 on
// usage or validation errors.  Output is deterministic: identical args
// (and seed) produce identical bytes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsl

#endif

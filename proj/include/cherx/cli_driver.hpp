#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cherx {

// Dispatches one CLI invocation. Returns 0 on success, 1 when a mathematical
// certificate fails (summands overlap, equivalence violated, selftest red),
// and 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherx

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mspec {

// Runs one CLI invocation. Exit codes: 0 success, 2 parse/usage error,
// 3 domain precondition violation, 4 resource limit exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mspec

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torinv::cli {

// Dispatches one command; writes the report to `out`, diagnostics to `err`.
// Exit codes: 0 success / affirmative, 1 negative verdict (invalid list,
// unequal lists, infeasible splitting), 2 schema error, 3 precondition
// failure, 64 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace torinv::cli

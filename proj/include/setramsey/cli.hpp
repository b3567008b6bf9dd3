#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setramsey {

// Dispatches one command line. Exit codes: 0 success/found, 3 not found
// (pattern absent, search certified nothing exact), 2 usage or input error,
// 1 internal error. Machine output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace setramsey

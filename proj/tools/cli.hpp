#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triples::cli {

// Runs one CLI invocation.  Exit codes: 0 success, 1 domain error, 2
// malformed input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace triples::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strata::cli {

// Returns the process exit code: 0 success, 2 parse error, 3 invalid datum,
// 4 semantic error, 5 search budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace strata::cli

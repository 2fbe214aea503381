#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagbr::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error,
// 3 budget exceeded, 4 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diagbr::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hk::cli {

/// Exit codes: 0 success, 1 a property or verification failure was found,
/// 2 bad input. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hk::cli

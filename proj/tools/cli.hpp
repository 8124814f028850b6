#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pierce {

// Full command-line surface; exit codes: 0 accept/success, 1 reject,
// 2 usage or format error, 3 oracle cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pierce

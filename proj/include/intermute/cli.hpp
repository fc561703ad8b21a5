#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intermute {

// Exit codes: 0 success, Equal or true; 1 NotEqual, false or not legitimate;
// 2 OutsideFragment; 3 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace intermute

// Command line entry point.  Exit codes: 0 success / property true,
// 1 property false (e.g. unbalanced input), 2 malformed input.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trop {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trop

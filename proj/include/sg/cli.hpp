#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sg {

// Exit codes: 0 success / consistent report, 1 verification failure or
// theorem-violation report, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sg

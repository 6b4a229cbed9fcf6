#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kqm {

// exit codes: 0 ok, 1 verification failure, 2 input error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kqm

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsing {

// Exit codes: 0 ok, 1 rejected certificate or internal failure, 2 invalid
// input, 3 non-Dynkin quiver, 4 no terminal reduction rule applies.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsing

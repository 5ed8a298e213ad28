#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace y2p {

// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
// 3 budget exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace y2p

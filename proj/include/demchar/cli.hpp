#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace demchar {

// Exit codes: 0 success/verified, 1 a mathematical identity failed to hold,
// 2 usage error, 3 term/candidate budget exceeded.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace demchar

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace projconst {

/// Entry point behind the projconst binary. Returns the process exit code:
/// 0 success, 2 schema/usage violation, 3 solver failure, 4 unsupported
/// construction, 1 anything else.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projconst

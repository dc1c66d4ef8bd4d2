#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpd {

// Batch command dispatch.  args excludes the program name.  Returns
// 0 when every check passed, 1 when a mathematical check failed (witnesses
// are printed), 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string cli_usage();

}  // namespace gpd

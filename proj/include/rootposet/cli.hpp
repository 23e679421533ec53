#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rootposet::cli {

// Entry point behind the binary. Exit codes: 0 success, 1 at least one
// verification check failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootposet::cli

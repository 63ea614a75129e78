#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsurf::cli {

// Command-line front end. Exit codes: 0 success, 1 domain error (reported
// structurally), 2 usage error. In JSON mode exactly one top-level object is
// written to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsurf::cli

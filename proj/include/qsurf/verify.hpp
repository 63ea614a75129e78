#pragma once

// The acceptance battery: every reference value the toolkit is expected to
// reproduce, grouped into eight criteria. Used both by the `verify-paper`
// subcommand and by the standalone acceptance test binary.

#include <string>
#include <vector>

namespace qsurf::verify {

struct Check {
  std::string id;
  std::string name;
  bool passed = true;
  long long assertions = 0;
  std::vector<std::string> failures;  // first few failure descriptions
};

std::vector<Check> run_acceptance();
bool all_passed(const std::vector<Check>& checks);

}  // namespace qsurf::verify

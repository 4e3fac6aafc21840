#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdecomp {

// Runs one CLI invocation. Exit codes: 0 success, 1 usage or input error,
// 2 mathematical verification/synthesis failure or oracle budget exhaustion.
// Output is deterministic: identical arguments produce identical bytes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdecomp

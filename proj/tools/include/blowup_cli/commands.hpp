#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blowup::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // selftest mismatch
  kUsage = 2,    // bad flags or input values
  kBudget = 3,   // census budget or 64-bit range exceeded
  kData = 4,     // malformed or inconsistent dataset
};

// args excludes the program name. Everything is written to out/err, nothing
// to the process streams, so the front end can be driven from tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blowup::cli

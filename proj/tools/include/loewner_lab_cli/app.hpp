#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loewner_lab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitCounterexample = 2,
  kExitSelfcheckFailure = 3,
};

/// Runs the loewner-lab command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loewner_lab::cli

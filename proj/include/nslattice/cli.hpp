#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nslattice::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kTheoremViolation = 3,
};

// Runs one `nslattice` invocation. `args` excludes the program name. Exactly
// one JSON document is written to `out` unless the invocation is a usage
// error (diagnostic on `err`) or a help request.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace nslattice::cli

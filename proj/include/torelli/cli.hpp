#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torelli::cli {

  enum ExitCode : int {
    ok                 = 0,
    schema_error       = 2,
    domain_error       = 3,
    derivation_failure = 4,
  };

  // Runs the command line `args` (without the program name). Results go to
  // `out`, errors to `err` as a JSON object; stdin is read for input "-".
  int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
              std::ostream& err);

}  // namespace torelli::cli

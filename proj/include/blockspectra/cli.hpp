#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockspectra::cli {

// Exit codes: 0 success, 1 ran correctly but a verified property failed
// (theorem counterexample, rewrite contract violation), 2 usage/input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CommandOutcome {
  int exit_code = 0;
  std::string output;       // stdout
  std::string diagnostics;  // stderr
};

CommandOutcome run_capture(const std::vector<std::string>& args);

}  // namespace blockspectra::cli

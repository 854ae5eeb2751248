// Command-line front end.  run() never exits the process, so the commands
// are testable in-process.
//
// Exit codes: 0 answered, 1 answered negatively (nontrivial, not a member,
// violations found), 2 input error, 3 budget exhausted.

#ifndef MAGNUS_CLI_HPP_
#define MAGNUS_CLI_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace magnus::cli {

  enum ExitCode : int { answered = 0, negative = 1, input_error = 2, budget = 3 };

  struct CommandOutcome {
    int                           exit_code = answered;
    std::string                   text;
    std::optional<nlohmann::json> document;
  };

  // args excludes the program name.
  CommandOutcome run(std::vector<std::string> const& args);

}  // namespace magnus::cli

#endif  // MAGNUS_CLI_HPP_

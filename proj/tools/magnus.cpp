#include <iostream>

#include "magnus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto outcome = magnus::cli::run(args);
  auto& os = outcome.exit_code >= magnus::cli::input_error ? std::cerr : std::cout;
  os << outcome.text;
  if (!outcome.text.empty() && outcome.text.back() != '\n') {
    os << '\n';
  }
  return outcome.exit_code;
}

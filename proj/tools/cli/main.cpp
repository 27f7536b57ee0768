#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const lininv::cli::CommandResult result = lininv::cli::run(args);
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics << '\n';
  std::cout << result.document.dump(2) << '\n';
  return result.exit_code;
}

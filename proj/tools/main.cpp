#include <iostream>
#include <string>
#include <vector>

#include "acmsplit/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = acmsplit::cli::run(args);
  std::cout << result.document;
  std::cerr << result.diagnostics;
  return result.exit_code;
}

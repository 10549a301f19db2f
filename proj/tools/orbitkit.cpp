#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "orbitkit/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return orbitkit::cli::run_cli(args, std::cout, std::cerr, isatty(STDERR_FILENO) != 0);
}

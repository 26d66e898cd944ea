#include <iostream>

#include "hopfkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  hopfkit::CommandResult r = hopfkit::run_command(args);
  std::cout << r.output;
  std::cerr << r.diagnostics;
  return r.exit_code;
}

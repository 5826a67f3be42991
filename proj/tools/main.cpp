#include <iostream>
#include <string>
#include <vector>

#include "atomized/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return atomized::cli::run(args, std::cout, std::cerr);
}

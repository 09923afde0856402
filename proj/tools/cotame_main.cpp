#include <iostream>
#include <string>
#include <vector>

#include "cotame/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cotame::cli::run(args, std::cout, std::cerr);
}

#include <iostream>

#include "slicebound/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return slicebound::run_cli(args, std::cout, std::cerr);
}

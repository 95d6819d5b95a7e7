#include <iostream>
#include <string>
#include <vector>

#include "electsys/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return electsys::run_cli(args, std::cout, std::cerr);
}

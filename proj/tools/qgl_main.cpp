#include <iostream>
#include <string>
#include <vector>

#include "qgl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qgl::run_cli(args, std::cout, std::cerr);
}

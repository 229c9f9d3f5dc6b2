#include <iostream>
#include <string>
#include <vector>

#include "circnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return circnet::run_command(args, std::cout, std::cerr);
}

#include <iostream>

#include "area/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return area::run_cli(args, std::cout, std::cerr);
}

#include <iostream>

#include "sp2brst/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sp2brst::run_cli(args, std::cout, std::cerr);
}

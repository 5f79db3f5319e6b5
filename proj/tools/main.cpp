#include <iostream>

#include "newtcut/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return newtcut::run_cli(args, std::cout, std::cerr);
}

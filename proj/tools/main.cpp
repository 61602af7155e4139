#include <iostream>
#include <vector>

#include "quivoa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quivoa::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "mendel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mendel::run_cli(args, std::cout, std::cerr);
}

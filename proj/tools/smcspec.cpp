#include <iostream>
#include <string>
#include <vector>

#include "smc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return smc::cli::run(args, std::cout, std::cerr);
}

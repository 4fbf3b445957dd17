#include <iostream>
#include <string>
#include <vector>

#include "bitscatter/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bitscatter::run_cli(args, std::cout, std::cerr);
}

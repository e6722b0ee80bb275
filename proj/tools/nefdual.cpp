#include <iostream>
#include <string>
#include <vector>

#include "nefdual/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nefdual::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "newtloj/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return newtloj::run_cli(args, std::cout, std::cerr);
}

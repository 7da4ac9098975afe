#include <iostream>

#include "gpretzel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gpretzel::run(args, std::cout, std::cerr);
}

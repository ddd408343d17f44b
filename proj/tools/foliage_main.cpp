#include <iostream>

#include "foliage/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return foliage::cli::run_command(args, std::cout, std::cerr);
}

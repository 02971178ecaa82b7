#include <iostream>

#include "mckay/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mckay::cli::run_cli(args, std::cout, std::cerr);
}

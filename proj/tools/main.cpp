#include <iostream>
#include <string>
#include <vector>

#include "normsieve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return normsieve::cli::run(args, std::cout, std::cerr);
}

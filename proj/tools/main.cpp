#include <iostream>
#include <string>
#include <vector>

#include "blockspectra/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return blockspectra::cli::run(args, std::cout, std::cerr);
}

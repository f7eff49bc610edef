#include <iostream>
#include <string>
#include <vector>

#include "exostein/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return exostein::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "arfkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return arfkit::cli::main(args, std::cout, std::cerr);
}

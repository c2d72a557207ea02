#include <iostream>
#include <string>
#include <vector>

#include "confrac/cli.hpp"

int main(int argc, char* argv[]) {
  const std::vector<std::string> args(argv, argv + argc);
  return confrac::cli::main_entry(args, std::cout, std::cerr);
}

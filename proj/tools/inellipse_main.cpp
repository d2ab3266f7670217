#include <iostream>
#include <string>
#include <vector>

#include "inellipse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return inellipse::cli::run(args, std::cin, std::cout, std::cerr);
}

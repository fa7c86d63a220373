#include <iostream>
#include <string>
#include <vector>

#include "peterson/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return peterson::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "asram/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return asram::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "pbm/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pbm::cli::run(args, std::cout, std::cerr);
}

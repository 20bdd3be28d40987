#include <iostream>
#include <string>
#include <vector>

#include "posg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return posg::cli::run(args, std::cout, std::cerr);
}

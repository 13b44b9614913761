#include <iostream>

#include "six/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return six::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "critgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return critgraph::run_cli(args, std::cout, std::cerr);
}

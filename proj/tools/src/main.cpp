#include <iostream>
#include <string>
#include <vector>

#include "qcentrality_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qcentrality::cli::run_cli(args, std::cout, std::cerr);
}

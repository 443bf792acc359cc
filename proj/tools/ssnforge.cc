#include <iostream>
#include <string>
#include <vector>

#include "ssnforge/cli/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ssnforge::cli::run(args, std::cout, std::cerr);
}

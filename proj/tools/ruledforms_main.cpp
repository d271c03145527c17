#include <iostream>
#include <string>
#include <vector>

#include "ruledforms/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ruledforms::cli::run(args, std::cout);
}

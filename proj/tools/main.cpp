#include <iostream>
#include <string>
#include <vector>

#include "eulerspline/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eulerspline::cli::run(args, std::cout, std::cerr);
}

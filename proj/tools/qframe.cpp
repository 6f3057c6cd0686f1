#include <iostream>
#include <string>
#include <vector>

#include "qframe/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qframe::cli_dispatch(args, std::cout, std::cerr);
}

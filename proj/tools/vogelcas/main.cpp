#include <iostream>
#include <string>
#include <vector>

#include "vogelcas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vogelcas::cli::run(args, std::cout, std::cerr);
}

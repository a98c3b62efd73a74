#include <iostream>
#include <string>
#include <vector>

#include "kdc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kdc::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "li/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return li::cli::run_cli(args, std::cout, std::cerr);
}

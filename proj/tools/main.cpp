#include <iostream>
#include <string>
#include <vector>

#include "liecoalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liecoalg::run_cli(args, std::cout, std::cerr);
}

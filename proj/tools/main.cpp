#include <iostream>
#include <string>
#include <vector>

#include "demchar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return demchar::cli_run(std::move(args), std::cout, std::cerr);
}

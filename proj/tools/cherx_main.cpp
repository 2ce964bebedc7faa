#include <iostream>
#include <string>
#include <vector>

#include "cherx/cli_driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cherx::run_cli(args, std::cout, std::cerr);
}

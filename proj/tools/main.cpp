#include <iostream>
#include <string>
#include <vector>

#include "setramsey/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return setramsey::run_cli(args, std::cout, std::cerr);
}

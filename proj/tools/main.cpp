#include <iostream>
#include <string>
#include <vector>

#include "textcx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return textcx::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "eispole/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eispole::cli::main(args, std::cout, std::cerr);
}

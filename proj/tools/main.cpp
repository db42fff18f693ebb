#include <iostream>
#include <string>
#include <vector>

#include "modnorm/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return modnorm::cli::run(args, std::cout, std::cerr);
}

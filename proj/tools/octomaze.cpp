#include <iostream>

#include "octomaze/cli.hpp"

int main(int argc, char** argv) {
  std::cout.sync_with_stdio(false);
  return octomaze::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}

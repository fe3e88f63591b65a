#include <iostream>

#include "rookgrowth/cli.hpp"

int main(int argc, char** argv) {
  return rookgrowth::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}

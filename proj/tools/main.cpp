#include <iostream>

#include "nilsem/cli.hpp"

int main(int argc, char** argv) {
  return nilsem::run_cli(argc, argv, std::cout, std::cerr);
}

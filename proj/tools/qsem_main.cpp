#include <iostream>

#include "qsem/cli.hpp"

int main(int argc, char** argv) {
  return qsem::cli::run_cli(argc, argv, std::cout, std::cerr);
}

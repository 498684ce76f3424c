#include <iostream>

#include "hyperideal/cli.hpp"

int main(int argc, char** argv) {
  return hyperideal::cli::run(argc, argv, std::cout, std::cerr);
}

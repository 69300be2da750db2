#include <iostream>

#include "rmspec/cli.hpp"

int main(int argc, char** argv) {
  return rmspec::cli::run(argc, argv, std::cout, std::cerr);
}

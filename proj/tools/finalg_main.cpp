#include <iostream>

#include "finalg/cli.hpp"

int main(int argc, char** argv) {
  return finalg::cli::run(argc, argv, std::cout, std::cerr);
}

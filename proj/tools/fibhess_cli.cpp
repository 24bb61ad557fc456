#include "fibhess/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return fibhess::cli::run(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "eop/cli.hpp"

int main(int argc, char** argv) {
  return eop::cli::run_main(argc, argv, std::cin, std::cout, std::cerr);
}

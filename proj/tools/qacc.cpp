#include <iostream>

#include "qacc/cli.hpp"

int main(int argc, char** argv) {
  return qacc::cli::main_entry(argc, argv, std::cout, std::cerr);
}

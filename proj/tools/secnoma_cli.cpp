#include <iostream>

#include "secnoma/cli.hpp"

int main(int argc, char** argv) {
  return secnoma::cli::main_entry(argc, argv, std::cout, std::cerr);
}

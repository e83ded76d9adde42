#include <iostream>

#include "vinpos/cli/commands.hpp"

int main(int argc, char** argv) {
  return vinpos::cli::run(argc, argv, std::cout, std::cerr);
}

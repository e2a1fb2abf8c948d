#include <iostream>

#include "tensorbraid/cli.hpp"

int main(int argc, char** argv) {
  return tensorbraid::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}

#include <iostream>

#include "muspectra/cli.hpp"

int main(int argc, char** argv) {
  return muspectra::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

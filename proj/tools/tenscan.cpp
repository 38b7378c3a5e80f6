#include <iostream>

#include "tenscan/cli.hpp"

int main(int argc, char** argv) {
  return tenscan::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

#include <iostream>
#include <vector>

#include "lgca/cli.hpp"

int main(int argc, char** argv) {
  return lgca::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

#include "fairdiv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return fairdiv::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

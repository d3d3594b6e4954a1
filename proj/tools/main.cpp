#include <iostream>
#include <string>
#include <vector>

#include "nilbij/cli.hpp"

int main(int argc, char** argv) {
  return nilbij::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}

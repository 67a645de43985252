#include <iostream>
#include <string>
#include <vector>

#include "btq/cli.hpp"

int main(int argc, char** argv) {
  return btq::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

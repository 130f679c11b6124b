#include <iostream>

#include "gml_cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return gml::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}

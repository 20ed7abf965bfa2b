#include <iostream>
#include <string>
#include <vector>

#include "powelem/cli.hpp"

int main(int argc, char** argv) {
  return powelem::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

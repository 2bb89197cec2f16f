#include <iostream>

#include "colorpart/cli.hpp"

int main(int argc, char** argv) {
  return colorpart::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

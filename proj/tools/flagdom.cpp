#include <iostream>
#include <string>
#include <vector>

#include "flagdom/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flagdom::run(args, std::cout, std::cerr);
}

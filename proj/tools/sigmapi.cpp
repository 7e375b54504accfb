#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <unistd.h>

#include "sigmapi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool color = isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
  return sigmapi::run(args, std::cout, std::cerr, color);
}

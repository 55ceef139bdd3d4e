#include <iostream>
#include <string>
#include <vector>

#include "altgame/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return altgame::cli::run(args, {std::cin, std::cout, std::cerr});
}

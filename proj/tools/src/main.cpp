#include <iostream>
#include <string>
#include <vector>

#include "tscale_cli/commands.hpp"
#include "tscale_cli/logging.hpp"

int main(int argc, char** argv) {
  tscale::cli::init_logging(tscale::cli::log_level_from_env());
  std::vector<std::string> args(argv, argv + argc);
  return tscale::cli::run(args, std::cout, std::cerr);
}

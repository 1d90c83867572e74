#include <iostream>
#include <string>
#include <vector>

#include "archive_label/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return archive_label::run_cli(args, std::cout, std::cerr, archive_label::CliEnvironment::from_process());
}

#include <iostream>
#include <vector>

#include "permfact/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  permfact::CliResult res = permfact::run_cli(args);
  std::cout << res.output.dump(2) << std::endl;
  return res.exit_code;
}

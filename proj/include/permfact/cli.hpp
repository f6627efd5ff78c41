#pragma once

#include <string>
#include <vector>

#include "permfact/json_io.hpp"

namespace permfact {

struct CliResult {
  int exit_code = 0;  // 0 ok, 1 verification mismatch, 2 usage/resource error
  Json output;
};

// The whole CLI behind a function so tests can drive it directly.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace permfact

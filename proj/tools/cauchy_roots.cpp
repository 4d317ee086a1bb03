#include "cauchy/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const auto res = cauchy::cli::run(args);
  std::cout << res.out;
  return res.exit_code;
}

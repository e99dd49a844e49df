#include <iostream>
#include <string>
#include <vector>

#include "pellab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = pellab::cli::run(args, std::cin);
  if (result.json) {
    std::cout << pellab::cli::render_json(result);
  } else {
    auto& out = result.status == pellab::cli::Status::Error ? std::cerr : std::cout;
    out << pellab::cli::render_text(result);
  }
  return pellab::cli::exit_code(result.status);
}

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tonnetz/cli.hpp"

int main(int argc, char** argv) {
  std::optional<tonnetz::Int> comma;
  if (const char* env = std::getenv("TONNETZ_DEFAULT_COMMA"); env && *env) {
    try {
      comma = std::stoll(env);
    } catch (const std::exception&) {
      std::cerr << "error: TONNETZ_DEFAULT_COMMA must be an integer\n";
      return 2;
    }
  }
  const std::vector<std::string> args(argv + 1, argv + argc);
  return tonnetz::run_cli(args, std::cout, std::cerr, comma);
}

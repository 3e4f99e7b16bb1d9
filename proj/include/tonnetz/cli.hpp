#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tonnetz/affine_permutation.hpp"

namespace tonnetz {

// Runs the command line (without the program name). Returns 0 on success,
// 1 on a domain error and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<Int> default_comma = std::nullopt);

}  // namespace tonnetz

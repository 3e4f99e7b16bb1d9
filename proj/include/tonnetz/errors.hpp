#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tonnetz {

// Raised by every text parser in the library. `position` is the byte offset
// into the input where parsing failed.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tonnetz

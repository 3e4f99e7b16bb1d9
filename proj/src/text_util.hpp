#pragma once

// Small cursor over a string used by the text-format parsers.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "tonnetz/errors.hpp"

namespace tonnetz::detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t position() const { return pos_; }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance(std::size_t n = 1) { pos_ += n; }
  std::string_view rest() const { return text_.substr(std::min(pos_, text_.size())); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume(std::string_view word) {
    if (rest().substr(0, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  // Optional sign ('+', '-', or U+2212) followed by decimal digits.
  std::int64_t integer() {
    const std::size_t start = pos_;
    bool negative = false;
    if (consume('-') || consume("\xE2\x88\x92")) negative = true;
    else consume('+');
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      pos_ = start;
      fail("expected integer");
    }
    std::int64_t value = 0;
    constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 10 - 9;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (value > kLimit) fail("integer out of range");
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace tonnetz::detail

#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "hardy/errors.hpp"

namespace hardy::detail {

inline constexpr std::string_view kEmptySetGlyph = "\xE2\x88\x85";  // U+2205

/// Byte cursor shared by the set-literal parser and the expression evaluator.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const noexcept { return pos_; }
  /// Offset of the next significant byte.
  std::size_t mark() {
    skip_ws();
    return pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume_empty_glyph() {
    skip_ws();
    if (text_.substr(pos_, kEmptySetGlyph.size()) != kEmptySetGlyph) return false;
    pos_ += kEmptySetGlyph.size();
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) fail(what);
  }

  bool at_identifier() { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string identifier() {
    if (!at_identifier()) fail("identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (std::isalnum(c) == 0 && c != '_') break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    if (!at_digit()) fail("non-negative integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    std::string found = "end of input";
    if (pos_ < text_.size()) {
      found = "'" + std::string(text_.substr(pos_, 1)) + "'";
    }
    throw ParseError(pos_, expected, found);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace hardy::detail

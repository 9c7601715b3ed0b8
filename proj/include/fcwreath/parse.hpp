#pragma once

// Word expressions:
//
//   expr   := factor*                      juxtaposition is the product
//   factor := atom ('^' int)*
//   atom   := 's' | 's_' index | 't' | 'e' | '(' expr ')' | '[' expr ',' expr ']'
//   index  := int | '(' int ')'
//   int    := ['+' | '-'] digits
//
// s_i is t^i s t^-i, [x, y] is x y x^-1 y^-1 and e is the empty word.
// Whitespace is ignored.

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fcwreath/word.hpp"

namespace fcwreath {

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what), offset(offset) {}
  std::size_t offset;
};

/// Expanded words longer than this are refused.
inline constexpr std::int64_t kMaxWordLength = std::int64_t{1} << 24;

namespace detail {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static Word checked(Word w, std::size_t at) {
    if (static_cast<std::int64_t>(w.size()) > kMaxWordLength) throw ParseError(at, "exponent overflow: word too long");
    return w;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected integer");
    }
    std::uint64_t magnitude = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, magnitude);
    if (ec != std::errc() || magnitude > static_cast<std::uint64_t>(INT64_MAX)) {
      pos_ = start;
      fail("exponent overflow");
    }
    const auto value = static_cast<std::int64_t>(magnitude);
    return negative ? -value : value;
  }

  Word expr() {
    Word w;
    for (;;) {
      const char c = peek();
      if (c == 's' || c == 't' || c == 'e' || c == '(' || c == '[')
        w = checked(w * factor(), pos_);
      else
        return w;
    }
  }

  Word factor() {
    Word w = atom();
    while (peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      const std::int64_t k = integer();
      const std::int64_t mag = k < 0 ? -k : k;
      if (!w.empty() && mag > kMaxWordLength / static_cast<std::int64_t>(w.size()))
        throw ParseError(at, "exponent overflow: word too long");
      w = w.pow(k);
    }
    return w;
  }

  Word atom() {
    const std::size_t at = pos_;
    switch (peek()) {
      case 's': {
        ++pos_;
        if (peek() != '_') return Word::s();
        ++pos_;
        std::int64_t i;
        if (peek() == '(') {
          ++pos_;
          i = integer();
          expect(')');
        } else {
          i = integer();
        }
        if ((i < 0 ? -i : i) > kMaxWordLength / 2) throw ParseError(at, "exponent overflow: index too large");
        return Word::s_at(i);
      }
      case 't': ++pos_; return Word::t();
      case 'e': ++pos_; return Word();
      case '(': {
        ++pos_;
        Word w = expr();
        expect(')');
        return w;
      }
      case '[': {
        ++pos_;
        Word x = expr();
        expect(',');
        Word y = expr();
        expect(']');
        return checked(commutator(x, y), at);
      }
      default: fail("expected s, t, e, '(' or '['");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a word expression and freely reduces it.
inline Word parse_word(std::string_view text) { return reduce(detail::WordParser(text).parse()); }

}  // namespace fcwreath

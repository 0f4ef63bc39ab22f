#include "linkhom/word_parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

class Parser {
 public:
  Parser(std::string_view text, char letter) : text_(text), letter_(letter) {}

  Word parse_all() {
    skip_separators();
    if (at_end()) return {};
    Word w = parse_word_until();
    skip_separators();
    if (!at_end()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) ++pos_;
  }

  bool starts_factor() const {
    const char c = peek();
    return c == letter_ || c == '(' || c == '[' || c == '1';
  }

  // factor+ ; stops before ')' ']' ',' or end.
  Word parse_word_until() {
    skip_separators();
    if (!starts_factor()) {
      if (at_end()) fail("expected a factor but reached end of input");
      fail("expected a factor, found '" + std::string(1, peek()) + "'");
    }
    Word w;
    while (true) {
      skip_separators();
      if (!starts_factor()) break;
      w = w * parse_factor();
    }
    return w;
  }

  Word parse_factor() {
    Word base = parse_base();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      return power(base, parse_signed());
    }
    return base;
  }

  Word parse_base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = parse_word_until();
      skip_separators();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word a = parse_word_until();
      skip_separators();
      expect(',');
      Word b = parse_word_until();
      skip_separators();
      expect(']');
      return commutator(a, b);
    }
    if (c == '1') {
      ++pos_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a generator");
      return {};
    }
    // c == letter_
    ++pos_;
    const std::size_t start = pos_;
    const std::uint64_t idx = parse_unsigned();
    if (idx == 0) throw ParseError(start, "generator index must be positive");
    if (idx > std::numeric_limits<GenIndex>::max()) throw ParseError(start, "generator index too large");
    return Word::generator(static_cast<GenIndex>(idx));
  }

  void expect(char c) {
    if (peek() != c) {
      if (at_end()) fail(std::string("expected '") + c + "' but reached end of input");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
    ++pos_;
  }

  std::uint64_t parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected digits");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{}) throw ParseError(start, "integer out of range");
    return v;
  }

  Exponent parse_signed() {
    const std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    const std::uint64_t mag = parse_unsigned();
    constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<Exponent>::max());
    if (mag > kMax) throw ParseError(start, "exponent out of range");
    const auto v = static_cast<Exponent>(mag);
    return neg ? -v : v;
  }

  std::string_view text_;
  char letter_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, char letter) { return Parser(text, letter).parse_all(); }

std::string print_word(const Word& w, char letter) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const Letter& l : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += letter;
    out += std::to_string(l.gen);
    if (l.exp != 1) {
      out += '^';
      out += std::to_string(l.exp);
    }
  }
  return out;
}

}  // namespace linkhom

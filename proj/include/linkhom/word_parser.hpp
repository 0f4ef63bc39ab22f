#pragma once

// Word-expression grammar (whitespace and '*' both separate factors):
//
//   word      := factor+ | '1' | <empty>
//   factor    := base ('^' signed-integer)?
//   base      := generator | '(' word ')' | '[' word ',' word ']'
//   generator := <letter> positive-integer
//
// The generator letter is 'x' by default; meridian words use 'a'.

#include <string>
#include <string_view>

#include "linkhom/word.hpp"

namespace linkhom {

/// Parses and reduces. Throws ParseError (with a 0-based character offset).
Word parse_word(std::string_view text, char letter = 'x');

/// Syllable form, e.g. "x1 x2 x1 x2^-1 x1^-2"; the identity prints as "1".
std::string print_word(const Word& w, char letter = 'x');

}  // namespace linkhom

// text.hpp -- text form of words and patterns
//
// Word literals:
//   - digit strings ("0101", "2101") map each digit to its value; the
//     alphabet size defaults to (max digit + 1) and may be widened but
//     not narrowed by an explicit q
//   - alphabetic strings ("bananas") map letters to ids in order of
//     first appearance
//   - with an explicit alphabet ("ab,cd,e"), the literal is a
//     space/comma-separated token sequence and ids follow alphabet order
// Pattern literals always rename by first appearance, so "cool" and
// "xyzz" parse to equal patterns.
#pragma once

#include "zimin/words.hpp"

#include <string>
#include <vector>

namespace zimin {

struct ParsedWord {
    Word word;
    std::vector<std::string> symbols; // display symbol per letter id
};

struct ParsedPattern {
    Pattern pattern;
    std::vector<std::string> symbols; // display symbol per variable id
};

/// Parses a word literal. q = 0 infers the alphabet size from the
/// literal; an explicit q must cover every letter used.
/// Throws std::invalid_argument on malformed literals.
ParsedWord parse_word(const std::string& literal, int q = 0);

/// Parses a word literal over an explicit token alphabet.
ParsedWord parse_word_with_alphabet(const std::string& literal,
                                    const std::vector<std::string>& alphabet);

ParsedPattern parse_pattern(const std::string& literal);

/// Renders a word with one symbol per letter: digits when q <= 10,
/// otherwise comma-separated ids.
std::string format_word(const Word& w);

/// Renders a pattern with variable letters a, b, c, ...
std::string format_pattern(const Pattern& p);

/// Splits a comma/space separated token list.
std::vector<std::string> split_tokens(const std::string& s);

} // namespace zimin

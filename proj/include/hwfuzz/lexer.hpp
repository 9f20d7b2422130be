#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hwfuzz/ast.hpp"

namespace hwfuzz {

enum class TokenKind {
  Identifier,
  Keyword,
  Number,      // plain decimal, value in `value`
  SizedNumber, // e.g. 32'hACEC, value + width
  Symbol,      // operators and punctuation, text in `text`
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  uint64_t value = 0;
  int width = 32;
  SourceSpan span;
};

// Tokenizes the supported subset. Throws ParseError on malformed input
// (bad literals, stray characters, unterminated comments).
std::vector<Token> tokenize(std::string_view text);

bool is_keyword(std::string_view word);

}  // namespace hwfuzz

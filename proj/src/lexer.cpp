#include "hwfuzz/lexer.hpp"

#include <cctype>
#include <unordered_set>

#include "hwfuzz/errors.hpp"

namespace hwfuzz {

namespace {

const std::unordered_set<std::string_view> kKeywords = {
    "module", "endmodule", "input", "output", "inout", "wire", "reg",
    "assign", "always", "begin", "end", "if", "else", "case", "endcase",
    "default", "posedge", "negedge", "or", "assert", "property", "disable",
    "iff", "initial", "parameter", "localparam", "function", "task",
    "generate", "endgenerate", "for", "while", "integer", "genvar",
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

int base_digit(char c, int base) {
  int v;
  if (c >= '0' && c <= '9') v = c - '0';
  else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
  else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
  else return -1;
  return v < base ? v : -1;
}

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int column = 1;

  bool done() const { return pos >= text.size(); }
  char peek(size_t off = 0) const {
    return pos + off < text.size() ? text[pos + off] : '\0';
  }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }
};

[[noreturn]] void fail(const Cursor& c, const std::string& msg) {
  throw ParseError(ParseError::Category::Syntax, c.line, c.column, msg);
}

}  // namespace

bool is_keyword(std::string_view word) { return kKeywords.count(word) != 0; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  Cursor c{text};

  auto push = [&](TokenKind kind, std::string tok_text, uint64_t value, int width,
                  SourceSpan span) {
    Token t;
    t.kind = kind;
    t.text = std::move(tok_text);
    t.value = value;
    t.width = width;
    t.span = span;
    tokens.push_back(std::move(t));
  };

  while (!c.done()) {
    char ch = c.peek();
    if (std::isspace(static_cast<unsigned char>(ch))) {
      c.advance();
      continue;
    }
    if (ch == '/' && c.peek(1) == '/') {
      while (!c.done() && c.peek() != '\n') c.advance();
      continue;
    }
    if (ch == '/' && c.peek(1) == '*') {
      SourceSpan start{c.line, c.column};
      c.advance();
      c.advance();
      bool closed = false;
      while (!c.done()) {
        if (c.peek() == '*' && c.peek(1) == '/') {
          c.advance();
          c.advance();
          closed = true;
          break;
        }
        c.advance();
      }
      if (!closed)
        throw ParseError(ParseError::Category::Syntax, start.line, start.column,
                         "unterminated block comment");
      continue;
    }

    SourceSpan span{c.line, c.column};

    if (is_ident_start(ch)) {
      std::string word;
      while (!c.done() && is_ident_char(c.peek())) {
        word.push_back(c.peek());
        c.advance();
      }
      push(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, word, 0, 0, span);
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(ch))) {
      uint64_t value = 0;
      std::string digits;
      while (!c.done() && (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '_')) {
        if (c.peek() != '_') digits.push_back(c.peek());
        c.advance();
      }
      if (c.peek() == '\'') {
        // sized literal: <size>'<base><digits>
        c.advance();
        long size = std::stol(digits);
        if (size <= 0)
          throw ParseError(ParseError::Category::Syntax, span.line, span.column,
                           "literal size must be positive");
        if (size > 64)
          throw ParseError(ParseError::Category::UnsupportedConstruct, span.line, span.column,
                           "literal wider than 64 bits");
        char base_ch = c.peek();
        int base;
        switch (base_ch) {
          case 'b': case 'B': base = 2; break;
          case 'd': case 'D': base = 10; break;
          case 'h': case 'H': base = 16; break;
          case 'o': case 'O':
            throw ParseError(ParseError::Category::UnsupportedConstruct, c.line, c.column,
                             "octal literals are not supported");
          default:
            fail(c, "expected literal base (b, d or h)");
        }
        c.advance();
        bool any = false;
        unsigned __int128 wide = 0;
        while (!c.done() && (base_digit(c.peek(), base) >= 0 || c.peek() == '_')) {
          if (c.peek() != '_') {
            wide = wide * static_cast<unsigned>(base) +
                   static_cast<unsigned>(base_digit(c.peek(), base));
            if (wide >> 64)
              throw ParseError(ParseError::Category::Syntax, span.line, span.column,
                               "literal value exceeds 64 bits");
            any = true;
          }
          c.advance();
        }
        if (!any) fail(c, "expected literal digits");
        value = static_cast<uint64_t>(wide);
        if (size < 64 && value >= (uint64_t{1} << size))
          throw ParseError(ParseError::Category::Syntax, span.line, span.column,
                           "literal value does not fit in declared size");
        push(TokenKind::SizedNumber, "", value, static_cast<int>(size), span);
      } else {
        unsigned __int128 wide = 0;
        for (char d : digits) {
          wide = wide * 10 + static_cast<unsigned>(d - '0');
          if (wide >> 64)
            throw ParseError(ParseError::Category::Syntax, span.line, span.column,
                             "literal value exceeds 64 bits");
        }
        value = static_cast<uint64_t>(wide);
        push(TokenKind::Number, "", value, 32, span);
      }
      continue;
    }

    // multi-char operators, longest match first
    static const char* kOps3[] = {"|->", "|=>"};
    static const char* kOps2[] = {"&&", "||", "==", "!=", "<=", ">=", "<<", ">>"};
    bool matched = false;
    for (const char* op : kOps3) {
      if (text.substr(c.pos, 3) == op) {
        push(TokenKind::Symbol, op, 0, 0, span);
        c.advance();
        c.advance();
        c.advance();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const char* op : kOps2) {
      if (text.substr(c.pos, 2) == op) {
        push(TokenKind::Symbol, op, 0, 0, span);
        c.advance();
        c.advance();
        matched = true;
        break;
      }
    }
    if (matched) continue;

    static const std::string kSingles = "()[]{};:,.@#?~!&|^+-*/%<>=";
    if (kSingles.find(ch) != std::string::npos) {
      push(TokenKind::Symbol, std::string(1, ch), 0, 0, span);
      c.advance();
      continue;
    }

    fail(c, std::string("unexpected character '") + ch + "'");
  }

  Token end;
  end.kind = TokenKind::End;
  end.span = {c.line, c.column};
  tokens.push_back(end);
  return tokens;
}

}  // namespace hwfuzz

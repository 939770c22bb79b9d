#pragma once

#include <string>
#include <vector>

#include "nn/diagnostics.hpp"

namespace nn {

enum class Tok : uint8_t {
  Ident, Num, Str,
  // reserved words
  KwPostulate, KwDef, KwCheck, KwFailCheck, KwExpecting, KwModel, KwExample,
  KwPaper, KwLet, KwIn, KwVyaptiVerdict, KwParyaptiCount,
  // punctuation
  LParen, RParen, LBrace, RBrace, Lt, Gt, Colon, Semi, Comma, Dot, Eq, At,
  Star, Arrow, Meet, Join, Tilde, Backslash,
  Eof
};

struct Token {
  Tok k;
  std::string text;  // identifier text / string literal contents
  long num = 0;
  Span span;
};

// Tokenizes UTF-8 source. Identifiers are Unicode letters (any byte >= 0x80
// counts), ASCII letters, '_' and digits, plus '-' when followed by another
// identifier character. Input is expected to be NFC-normalized; identifiers
// compare byte-wise. Comments run from "--" to end of line.
std::vector<Token> lex(const std::string& text, const std::string& filename);

}  // namespace nn

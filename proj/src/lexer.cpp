#include "nn/lexer.hpp"

namespace nn {

static bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c >= 0x80;
}

static bool ident_cont(unsigned char c) {
  return ident_start(c) || (c >= '0' && c <= '9');
}

static Tok reserved(const std::string& s) {
  if (s == "postulate") return Tok::KwPostulate;
  if (s == "def") return Tok::KwDef;
  if (s == "check") return Tok::KwCheck;
  if (s == "fail-check") return Tok::KwFailCheck;
  if (s == "expecting") return Tok::KwExpecting;
  if (s == "model") return Tok::KwModel;
  if (s == "example") return Tok::KwExample;
  if (s == "paper") return Tok::KwPaper;
  if (s == "let") return Tok::KwLet;
  if (s == "in") return Tok::KwIn;
  if (s == "vyapti-verdict") return Tok::KwVyaptiVerdict;
  if (s == "paryapti-count") return Tok::KwParyaptiCount;
  return Tok::Ident;
}

std::vector<Token> lex(const std::string& text, const std::string& filename) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;
  auto span_at = [&](size_t start, int sline, int scol) {
    Span sp;
    sp.file = filename;
    sp.line = sline;
    sp.col = scol;
    sp.offset = static_cast<int>(start);
    sp.len = static_cast<int>(i - start);
    return sp;
  };
  auto err = [&](const std::string& msg) {
    Diagnostic d;
    d.code = Code::ParseError;
    d.span.file = filename;
    d.span.line = line;
    d.span.col = col;
    d.span.offset = static_cast<int>(i);
    d.span.len = 1;
    d.message = msg;
    throw nn::ParseError(std::move(d));
  };
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < text.size(); ++k) {
      if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
      ++i;
    }
  };
  auto push = [&](Tok k, size_t start, int sline, int scol, std::string s = "") {
    Token t;
    t.k = k;
    t.text = std::move(s);
    t.span = span_at(start, sline, scol);
    out.push_back(std::move(t));
  };

  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
    // comment
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    size_t start = i;
    int sline = line, scol = col;
    if (ident_start(c)) {
      while (i < text.size()) {
        unsigned char d = static_cast<unsigned char>(text[i]);
        if (ident_cont(d)) { advance(1); continue; }
        if (d == '-' && i + 1 < text.size() &&
            ident_cont(static_cast<unsigned char>(text[i + 1])) &&
            text[i + 1] != '-') {
          advance(1);
          continue;
        }
        break;
      }
      std::string s = text.substr(start, i - start);
      push(reserved(s), start, sline, scol, s);
      continue;
    }
    if (c >= '0' && c <= '9') {
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') advance(1);
      Token t;
      t.k = Tok::Num;
      t.text = text.substr(start, i - start);
      t.num = std::stol(t.text);
      t.span = span_at(start, sline, scol);
      out.push_back(std::move(t));
      continue;
    }
    if (c == '"') {
      advance(1);
      std::string s;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < text.size()) {
          advance(1);
          s.push_back(text[i]);
          advance(1);
        } else {
          s.push_back(text[i]);
          advance(1);
        }
      }
      if (i >= text.size()) err("unterminated string literal");
      advance(1);
      push(Tok::Str, start, sline, scol, s);
      continue;
    }
    switch (c) {
      case '(': advance(1); push(Tok::LParen, start, sline, scol); continue;
      case ')': advance(1); push(Tok::RParen, start, sline, scol); continue;
      case '{': advance(1); push(Tok::LBrace, start, sline, scol); continue;
      case '}': advance(1); push(Tok::RBrace, start, sline, scol); continue;
      case '<': advance(1); push(Tok::Lt, start, sline, scol); continue;
      case '>': advance(1); push(Tok::Gt, start, sline, scol); continue;
      case ':': advance(1); push(Tok::Colon, start, sline, scol); continue;
      case ';': advance(1); push(Tok::Semi, start, sline, scol); continue;
      case ',': advance(1); push(Tok::Comma, start, sline, scol); continue;
      case '.': advance(1); push(Tok::Dot, start, sline, scol); continue;
      case '=': advance(1); push(Tok::Eq, start, sline, scol); continue;
      case '@': advance(1); push(Tok::At, start, sline, scol); continue;
      case '*': advance(1); push(Tok::Star, start, sline, scol); continue;
      case '~': advance(1); push(Tok::Tilde, start, sline, scol); continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          advance(2);
          push(Tok::Arrow, start, sline, scol);
          continue;
        }
        err("stray '-'");
      case '/':
        if (i + 1 < text.size() && text[i + 1] == '\\') {
          advance(2);
          push(Tok::Meet, start, sline, scol);
          continue;
        }
        err("stray '/'");
      case '\\':
        if (i + 1 < text.size() && text[i + 1] == '/') {
          advance(2);
          push(Tok::Join, start, sline, scol);
          continue;
        }
        advance(1);
        push(Tok::Backslash, start, sline, scol);
        continue;
      default:
        err("unexpected character");
    }
  }
  Token t;
  t.k = Tok::Eof;
  t.span.file = filename;
  t.span.line = line;
  t.span.col = col;
  t.span.offset = static_cast<int>(i);
  t.span.len = 0;
  out.push_back(std::move(t));
  return out;
}

}  // namespace nn

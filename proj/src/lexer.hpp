#pragma once

// Tokenizer shared by the problem-file and formula parsers. Works on one
// line at a time so errors carry line and column.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "setshare/error.hpp"

namespace setshare::detail {

enum class TokenKind {
  kIdent,
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kComma,
  kEquals,
  kTilde,
  kAmp,
  kBar,
  kArrow,
  kIff,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  std::size_t column = 0;
};

inline const char* describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kComma: return "','";
    case TokenKind::kEquals: return "'='";
    case TokenKind::kTilde: return "'~'";
    case TokenKind::kAmp: return "'&'";
    case TokenKind::kBar: return "'|'";
    case TokenKind::kArrow: return "'->'";
    case TokenKind::kIff: return "'<->'";
    case TokenKind::kEnd: return "end of line";
  }
  return "token";
}

class Lexer {
 public:
  /// `column_offset` is the 0-based position of `text` within its line.
  Lexer(std::string_view text, std::size_t line, std::size_t column_offset = 0)
      : text_(text), line_(line), offset_(column_offset) {
    advance();
  }

  const Token& peek() const { return current_; }
  std::size_t line() const { return line_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(TokenKind kind) {
    if (current_.kind != kind) return false;
    advance();
    return true;
  }

  Token expect(TokenKind kind) {
    if (current_.kind != kind) {
      fail(std::string("expected ") + describe(kind) + ", found " + found());
    }
    return next();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, current_.column);
  }

  std::string found() const {
    if (current_.kind == TokenKind::kIdent) return "'" + current_.text + "'";
    return describe(current_.kind);
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = Token{};
    current_.column = offset_ + pos_ + 1;
    if (pos_ >= text_.size()) {
      current_.kind = TokenKind::kEnd;
      return;
    }
    const char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      current_.kind = TokenKind::kIdent;
      current_.text = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      return;
    }
    auto single = [&](TokenKind k) {
      current_.kind = k;
      current_.text = std::string(1, c);
      ++pos_;
    };
    switch (c) {
      case '{': return single(TokenKind::kLBrace);
      case '}': return single(TokenKind::kRBrace);
      case '(': return single(TokenKind::kLParen);
      case ')': return single(TokenKind::kRParen);
      case ',': return single(TokenKind::kComma);
      case '=': return single(TokenKind::kEquals);
      case '~': return single(TokenKind::kTilde);
      case '&': return single(TokenKind::kAmp);
      case '|': return single(TokenKind::kBar);
      default: break;
    }
    if (text_.substr(pos_, 2) == "->") {
      current_.kind = TokenKind::kArrow;
      current_.text = "->";
      pos_ += 2;
      return;
    }
    if (text_.substr(pos_, 3) == "<->") {
      current_.kind = TokenKind::kIff;
      current_.text = "<->";
      pos_ += 3;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, current_.column);
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  Token current_;
};

}  // namespace setshare::detail

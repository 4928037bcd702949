// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#include "sigforget/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sigforget {

namespace {

enum class TokenKind {
  Atom,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  LParen,
  RParen,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  // base_line offsets error positions when parsing a line from a file.
  Lexer(std::string_view text, std::size_t base_line)
      : text_(text), line_(base_line) {}

  Token next() {
    skip_space();
    const std::size_t line = line_;
    const std::size_t col = column_;
    if (pos_ >= text_.size()) return {TokenKind::End, "", line, col};
    const char c = text_[pos_];
    if (c == '(') return advance({TokenKind::LParen, "(", line, col}, 1);
    if (c == ')') return advance({TokenKind::RParen, ")", line, col}, 1);
    if (c == '!') return advance({TokenKind::Not, "!", line, col}, 1);
    if (c == '&') return advance({TokenKind::And, "&", line, col}, 1);
    if (c == '|') return advance({TokenKind::Or, "|", line, col}, 1);
    if (c == '-') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>')
        return advance({TokenKind::Implies, "->", line, col}, 2);
      throw ParseError("expected '->' after '-'", line, col);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_'))
        ++end;
      std::string word(text_.substr(pos_, end - pos_));
      Token tok{TokenKind::Atom, word, line, col};
      if (word == "true") tok.kind = TokenKind::True;
      if (word == "false") tok.kind = TokenKind::False;
      if (tok.kind == TokenKind::Atom &&
          word.rfind(kReservedAtomPrefix, 0) == 0)
        throw ParseError("atom name '" + word +
                             "' uses the reserved '__' prefix",
                         line, col);
      return advance(tok, word.size());
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     col);
  }

 private:
  Token advance(Token tok, std::size_t width) {
    pos_ += width;
    column_ += width;
    return tok;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++column_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, std::size_t base_line)
      : lexer_(text, base_line), lookahead_(lexer_.next()) {}

  Formula parse() {
    if (lookahead_.kind == TokenKind::End)
      throw ParseError("empty formula", lookahead_.line, lookahead_.column);
    Formula f = parse_implies();
    if (lookahead_.kind != TokenKind::End)
      throw ParseError("unexpected trailing input '" + lookahead_.text + "'",
                       lookahead_.line, lookahead_.column);
    return f;
  }

 private:
  Token consume() {
    Token tok = lookahead_;
    lookahead_ = lexer_.next();
    return tok;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (lookahead_.kind == TokenKind::Implies) {
      consume();
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lookahead_.kind == TokenKind::Or) {
      consume();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lookahead_.kind == TokenKind::And) {
      consume();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (lookahead_.kind == TokenKind::Not) {
      consume();
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    Token tok = consume();
    switch (tok.kind) {
      case TokenKind::True:
        return Formula::top();
      case TokenKind::False:
        return Formula::bottom();
      case TokenKind::Atom:
        return Formula::atom(std::move(tok.text));
      case TokenKind::LParen: {
        Formula f = parse_implies();
        if (lookahead_.kind != TokenKind::RParen)
          throw ParseError("expected ')'", lookahead_.line, lookahead_.column);
        consume();
        return f;
      }
      case TokenKind::End:
        throw ParseError("unexpected end of input", tok.line, tok.column);
      default:
        throw ParseError("unexpected token '" + tok.text + "'", tok.line,
                         tok.column);
    }
  }

  Lexer lexer_;
  Token lookahead_;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(text, 1).parse();
}

KnowledgeBase parse_kb(std::string_view text) {
  KnowledgeBase kb;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') blank = false;
    if (!blank) kb.add(Parser(line, line_no).parse());
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return kb;
}

KnowledgeBase load_kb_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read knowledge base file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kb(buf.str());
}

}  // namespace sigforget

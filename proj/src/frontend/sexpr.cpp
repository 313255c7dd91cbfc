#include "adt/frontend/sexpr.hpp"

#include <cctype>

#include "adt/core/error.hpp"

namespace adt {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skipSpace();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skipSpace();
    }
    return out;
  }

 private:
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skipSpace() {
    while (pos_ < text_.size()) {
      char c = peek();
      if (c == ';') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  SExpr read() {
    SExpr e;
    e.line = line_;
    e.column = col_;
    char c = peek();
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    if (c == '(') {
      e.kind = SExpr::Kind::List;
      advance();
      skipSpace();
      while (true) {
        if (pos_ >= text_.size()) throw ParseError("unclosed '('", e.line, e.column);
        if (peek() == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
        skipSpace();
      }
    }
    if (c == '"') {
      e.kind = SExpr::Kind::String;
      advance();
      while (true) {
        if (pos_ >= text_.size()) throw ParseError("unterminated string", e.line, e.column);
        if (peek() == '"') {
          advance();
          // "" is an escaped quote.
          if (pos_ < text_.size() && peek() == '"') {
            e.text.push_back('"');
            advance();
            continue;
          }
          return e;
        }
        e.text.push_back(peek());
        advance();
      }
    }
    if (c == '|') {
      advance();
      while (true) {
        if (pos_ >= text_.size()) throw ParseError("unterminated quoted symbol", e.line, e.column);
        if (peek() == '|') {
          advance();
          return e;
        }
        e.text.push_back(peek());
        advance();
      }
    }
    while (pos_ < text_.size()) {
      c = peek();
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';' || c == '"' ||
          c == '|') {
        break;
      }
      e.text.push_back(c);
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<SExpr> readSExprs(std::string_view text) { return Reader(text).all(); }

std::string toString(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::Symbol:
      return e.text;
    case SExpr::Kind::String:
      return "\"" + e.text + "\"";
    case SExpr::Kind::List: {
      std::string s = "(";
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) s += ' ';
        s += toString(e.items[i]);
      }
      return s + ")";
    }
  }
  return {};
}

}  // namespace adt

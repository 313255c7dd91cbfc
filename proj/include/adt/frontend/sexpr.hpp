#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace adt {

/// An s-expression node with the 1-based position of its first character.
struct SExpr {
  enum class Kind { Symbol, String, List };

  Kind kind = Kind::Symbol;
  /// Symbol text (quotes of |…| removed) or string contents.
  std::string text;
  std::vector<SExpr> items;
  int line = 0;
  int column = 0;

  bool isList() const { return kind == Kind::List; }
  bool isSymbol() const { return kind == Kind::Symbol; }
  bool isSymbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
  /// List whose first item is the symbol `head`.
  bool isCall(std::string_view head) const { return isList() && !items.empty() && items[0].isSymbol(head); }
};

/// Reads every top-level s-expression. Handles `;` comments, "strings"
/// and |quoted| symbols. Throws ParseError on unbalanced input.
std::vector<SExpr> readSExprs(std::string_view text);

std::string toString(const SExpr& e);

}  // namespace adt

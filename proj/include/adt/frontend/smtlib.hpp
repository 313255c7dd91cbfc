#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adt/clausify/formula.hpp"

namespace adt {

enum class ExpectedStatus { Sat, Unsat };
enum class LogicNote { None, Datatypes, Codatatypes, Mixed };

const char* toString(LogicNote n);

/// One declaring command, kept so printing replays declarations in the
/// original order (and so reproduces sort and symbol ids).
struct Declaration {
  enum class Kind { Sort, Datatypes, Codatatypes, Function };
  Kind kind = Kind::Sort;
  std::vector<SortId> sorts;
  SymbolId symbol;
};

/// A parsed SMTLIB problem. Datatype sorts are finalized, so inductive
/// sorts carry their subterm predicate.
struct Problem {
  Signature signature;
  std::vector<Declaration> declarations;
  std::vector<Formula> assertions;
  std::optional<ExpectedStatus> expected;
  LogicNote logicNote = LogicNote::None;
  /// Commands accepted but ignored (set-logic, set-option, ...).
  std::vector<std::string> notes;
  bool checkSat = false;
};

/// Parses the supported SMTLIB subset: declare-datatypes (pre-2.6 and 2.6
/// forms), declare-datatype, declare-codatatypes, declare-sort,
/// declare-fun, declare-const, assert over and/or/not/=>/=/distinct/xor/
/// forall/exists, check-sat, set-info, set-logic, set-option, exit.
/// Throws ParseError with a position.
Problem parseSmtlib(std::string_view text);

/// SMTLIB text for `p`; parsing it back yields the same signature and
/// alpha-equivalent assertions.
std::string printSmtlib(const Problem& p);

/// The game benchmark: Nat {z, s(pred)} and the negation of
/// winning_k(s(z)). Throws UserError for k < 1.
std::string generateGame(int k);

}  // namespace adt
